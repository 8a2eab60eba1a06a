#include "canonlab/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace canonlab {

namespace {

Json mpz_array(const std::vector<mpz_class>& values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(v.get_str());
    return a;
}

std::string gamma_cell(const std::optional<GammaExpansion>& g) {
    if (!g) return "";
    std::string s;
    for (const auto& v : g->gamma) {
        if (!s.empty()) s += ' ';
        s += v.get_str();
    }
    return s;
}

}  // namespace

Json to_json(const Poset& poset, const std::optional<Labeling>& labeling) {
    Json j;
    j["elements"] = poset.size();
    Json covers = Json::array();
    for (const auto& c : poset.covers()) covers.push_back({c.lower, c.upper});
    j["covers"] = std::move(covers);
    if (labeling) j["labels"] = labeling->values();
    return j;
}

LabeledPoset poset_from_json(const Json& j, bool repair) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw FormatError("poset JSON needs \"elements\" and \"covers\"");
    if (!j["elements"].is_number_unsigned())
        throw FormatError("\"elements\" must be a non-negative integer");
    const auto size = j["elements"].get<std::size_t>();
    std::vector<Cover> covers;
    for (const auto& pair : j["covers"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned())
            throw FormatError("each cover must be a pair of element indices");
        covers.push_back({pair[0].get<Element>(), pair[1].get<Element>()});
    }
    LabeledPoset result{repair ? Poset::from_relations(size, std::move(covers))
                               : Poset(size, std::move(covers)),
                        std::nullopt};
    if (j.contains("labels")) {
        auto labels = j["labels"].get<std::vector<Label>>();
        if (labels.size() != size) throw FormatError("\"labels\" must have one entry per element");
        result.labeling = Labeling(std::move(labels));
    }
    return result;
}

std::string dump_poset(const Poset& poset, const std::optional<Labeling>& labeling) {
    return to_json(poset, labeling).dump();
}

LabeledPoset parse_poset(const std::string& text, bool repair) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    } catch (const Json::type_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return poset_from_json(j, repair);
    } catch (const Json::exception& e) {
        throw FormatError(std::string("bad poset JSON: ") + e.what());
    }
}

LabeledPoset load_poset_file(const std::string& path, bool repair) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_poset(buffer.str(), repair);
}

Json to_json(const IntPolynomial& p) { return Json{{"coeffs", mpz_array(p.coefficients())}}; }

IntPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw FormatError("polynomial JSON needs a \"coeffs\" array");
    std::vector<mpz_class> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw FormatError("coefficients are decimal strings");
        mpz_class v;
        if (v.set_str(c.get<std::string>(), 10) != 0)
            throw FormatError("bad coefficient: " + c.get<std::string>());
        coeffs.push_back(v);
    }
    return IntPolynomial(std::move(coeffs));
}

Json to_json(const GammaExpansion& g) {
    return Json{{"center_degree", g.center_degree}, {"gamma", mpz_array(g.gamma)}};
}

Json to_json(const IdentityReport& report) {
    Json j{{"name", report.name},
           {"holds", report.holds},
           {"lhs", to_json(report.lhs)},
           {"rhs", to_json(report.rhs)}};
    if (!report.detail.empty()) j["detail"] = report.detail;
    if (report.witness) j["witness"] = *report.witness;
    return j;
}

Json to_json(const Certificate& certificate) {
    const auto& spec = certificate.spec;
    Json removed = Json::array();
    for (const auto& e : spec.removed) removed.push_back({e.p, e.j});
    Json j;
    j["spec"] = Json{{"m", spec.m}, {"n", spec.n}, {"removed", std::move(removed)}};
    j["poset"] = to_json(spec.poset());
    j["polynomial"] = to_json(certificate.polynomial);
    j["gamma"] = certificate.gamma ? mpz_array(certificate.gamma->gamma) : Json(nullptr);
    j["violation"] = certificate.violation;
    return j;
}

Json to_json(const SweepRow& row) {
    Json removed = Json::array();
    for (const auto& e : row.removed) removed.push_back({e.p, e.j});
    return Json{{"removed_edge_mask", row.mask},
                {"removed", std::move(removed)},
                {"mode", to_string(row.mode)},
                {"polynomial", to_json(row.polynomial)},
                {"degree", row.polynomial.degree()},
                {"palindromic", row.palindromic},
                {"gamma", row.gamma ? mpz_array(row.gamma->gamma) : Json(nullptr)},
                {"gamma_positive", row.gamma_positive},
                {"unimodal", row.unimodal}};
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
    out << "removed_edge_mask,degree,palindromic,gamma,gamma_positive,unimodal\n";
    for (const auto& row : report.rows)
        out << row.mask << ',' << row.polynomial.degree() << ',' << row.palindromic << ','
            << gamma_cell(row.gamma) << ',' << row.gamma_positive << ',' << row.unimodal << '\n';
}

std::vector<CopyEdge> parse_edge_list(const std::string& text) {
    std::vector<CopyEdge> edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw FormatError("edge must look like p:j, got " + item);
        try {
            std::size_t used = 0;
            const auto p = std::stoul(item.substr(0, colon), &used);
            if (used != colon) throw FormatError("bad edge " + item);
            const std::string rest = item.substr(colon + 1);
            const auto jv = std::stoul(rest, &used);
            if (used != rest.size()) throw FormatError("bad edge " + item);
            edges.push_back({p, jv});
        } catch (const std::logic_error&) {
            throw FormatError("bad edge " + item);
        }
    }
    return edges;
}

}  // namespace canonlab

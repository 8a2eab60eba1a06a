#pragma once

// JSON and CSV formats for posets, polynomials, sweeps and certificates.
//
// Poset:       {"elements":N,"covers":[[a,b],...],"labels":[...]}  (labels optional)
// Polynomial:  {"coeffs":["1","4","4","1"]}  (decimal strings, any size)

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "canonlab/canon.hpp"
#include "canonlab/poset.hpp"
#include "canonlab/polynomial.hpp"

namespace canonlab {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LabeledPoset {
    Poset poset;
    std::optional<Labeling> labeling;
};

Json to_json(const Poset& poset, const std::optional<Labeling>& labeling = std::nullopt);
// With repair set, comparable pairs are accepted and reduced to covers.
// Cycles and malformed input throw (CycleError carries the cycle).
LabeledPoset poset_from_json(const Json& j, bool repair = false);

std::string dump_poset(const Poset& poset, const std::optional<Labeling>& labeling = std::nullopt);
LabeledPoset parse_poset(const std::string& text, bool repair = false);
LabeledPoset load_poset_file(const std::string& path, bool repair = false);

Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const GammaExpansion& g);
Json to_json(const IdentityReport& report);
Json to_json(const Certificate& certificate);
Json to_json(const SweepRow& row);

// removed_edge_mask,degree,palindromic,gamma,gamma_positive,unimodal
void write_sweep_csv(std::ostream& out, const SweepReport& report);

// "1:2,2:1" -> {(1,2),(2,1)}
std::vector<CopyEdge> parse_edge_list(const std::string& text);

}  // namespace canonlab

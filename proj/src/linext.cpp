#include "canonlab/linext.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace canonlab {

bool is_linear_extension(const Poset& poset, std::span<const Element> order) {
    if (order.size() != poset.size()) return false;
    std::vector<std::size_t> position(poset.size(), SIZE_MAX);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= poset.size() || position[order[i]] != SIZE_MAX) return false;
        position[order[i]] = i;
    }
    return std::all_of(poset.covers().begin(), poset.covers().end(), [&](const Cover& c) {
        return position[c.lower] < position[c.upper];
    });
}

namespace {

class Enumerator {
public:
    Enumerator(const Poset& poset, const ExtensionVisitor& visit)
        : poset_(poset), visit_(visit), pending_(poset.size()), placed_(poset.size(), false) {
        for (Element x = 0; x < poset.size(); ++x) pending_[x] = poset.lower_covers(x).size();
        order_.reserve(poset.size());
    }

    void place(Element x) {
        if (x >= poset_.size() || placed_[x] || pending_[x] != 0)
            throw std::invalid_argument("prefix is not a valid start of a linear extension");
        push(x);
    }

    std::size_t run() {
        descend();
        return visited_;
    }

private:
    void push(Element x) {
        placed_[x] = true;
        order_.push_back(x);
        for (Element y : poset_.upper_covers(x)) --pending_[y];
    }

    void pop() {
        Element x = order_.back();
        order_.pop_back();
        placed_[x] = false;
        for (Element y : poset_.upper_covers(x)) ++pending_[y];
    }

    // Returns false once the visitor asked to stop.
    bool descend() {
        if (order_.size() == poset_.size()) {
            ++visited_;
            return visit_(std::span<const Element>(order_));
        }
        for (Element x = 0; x < poset_.size(); ++x) {
            if (placed_[x] || pending_[x] != 0) continue;
            push(x);
            bool keep_going = descend();
            pop();
            if (!keep_going) return false;
        }
        return true;
    }

    const Poset& poset_;
    const ExtensionVisitor& visit_;
    std::vector<std::size_t> pending_;
    std::vector<bool> placed_;
    std::vector<Element> order_;
    std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_linear_extension(const Poset& poset, const ExtensionVisitor& visit,
                                      std::span<const Element> prefix, const Limits& limits) {
    require_within_cap("poset", poset.size(), limits.max_elements);
    Enumerator e(poset, visit);
    for (Element x : prefix) e.place(x);
    return e.run();
}

std::vector<LinearExtension> linear_extensions(const Poset& poset, const Limits& limits) {
    std::vector<LinearExtension> result;
    for_each_linear_extension(
        poset,
        [&](std::span<const Element> order) {
            result.push_back({{order.begin(), order.end()}});
            return true;
        },
        {}, limits);
    return result;
}

std::vector<std::vector<Element>> extension_prefixes(const Poset& poset, std::size_t length) {
    length = std::min(length, poset.size());
    std::vector<std::vector<Element>> result;
    std::vector<std::size_t> pending(poset.size());
    for (Element x = 0; x < poset.size(); ++x) pending[x] = poset.lower_covers(x).size();
    std::vector<bool> placed(poset.size(), false);
    std::vector<Element> prefix;
    auto grow = [&](auto&& self) -> void {
        if (prefix.size() == length) {
            result.push_back(prefix);
            return;
        }
        for (Element x = 0; x < poset.size(); ++x) {
            if (placed[x] || pending[x] != 0) continue;
            placed[x] = true;
            prefix.push_back(x);
            for (Element y : poset.upper_covers(x)) --pending[y];
            self(self);
            for (Element y : poset.upper_covers(x)) ++pending[y];
            prefix.pop_back();
            placed[x] = false;
        }
    };
    grow(grow);
    return result;
}

mpz_class count_linear_extensions(const Poset& poset) {
    require_within_cap("poset (ideal counting)", poset.size(), 64);
    const std::size_t n = poset.size();
    std::vector<std::uint64_t> needs(n, 0);
    for (const auto& c : poset.covers()) needs[c.upper] |= std::uint64_t{1} << c.lower;
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::unordered_map<std::uint64_t, mpz_class> memo;
    auto count = [&](auto&& self, std::uint64_t ideal) -> mpz_class {
        if (ideal == full) return 1;
        if (auto it = memo.find(ideal); it != memo.end()) return it->second;
        mpz_class total = 0;
        for (std::size_t x = 0; x < n; ++x) {
            const std::uint64_t bit = std::uint64_t{1} << x;
            if ((ideal & bit) == 0 && (needs[x] & ~ideal) == 0) total += self(self, ideal | bit);
        }
        memo.emplace(ideal, total);
        return total;
    };
    return count(count, 0);
}

Word word(std::span<const Element> order, const Labeling& w) {
    Word result(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) result[i] = w(order[i]);
    return result;
}

std::vector<std::size_t> descent_set(std::span<const Label> w) {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) result.push_back(i + 1);
    return result;
}

std::size_t descent_count(std::span<const Label> w) {
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i + 1] < w[i];
    return d;
}

std::size_t weak_descent_count(std::span<const Label> w) {
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i + 1] <= w[i];
    return d;
}

MultisetWord::MultisetWord(Word letters, std::size_t multiplicity)
    : letters_(std::move(letters)), multiplicity_(multiplicity) {
    if (multiplicity_ == 0 || letters_.size() % multiplicity_ != 0)
        throw std::invalid_argument("word length is not a multiple of the multiplicity");
    const std::size_t n = letters_.size() / multiplicity_;
    std::vector<std::size_t> seen(n + 1, 0);
    for (Label a : letters_) {
        if (a < 1 || a > n) throw std::invalid_argument("letter outside 1..n");
        ++seen[a];
    }
    for (std::size_t a = 1; a <= n; ++a)
        if (seen[a] != multiplicity_)
            throw std::invalid_argument("letter multiplicities are not all equal to m");
}

std::string MultisetWord::str() const {
    std::string s;
    for (Label a : letters_) {
        if (alphabet_size() > 9 && !s.empty()) s += ',';
        s += std::to_string(a);
    }
    return s;
}

MultisetWord parse_multiset_word(std::string_view digits, std::size_t multiplicity) {
    Word letters;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("expected digits 1-9");
        letters.push_back(static_cast<Label>(c - '0'));
    }
    return MultisetWord(std::move(letters), multiplicity);
}

MultisetWord multiset_word(std::span<const Element> order, const Labeling& canon_label,
                           std::size_t m) {
    Word letters(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        letters[i] = static_cast<Label>((canon_label(order[i]) + m - 1) / m);
    return MultisetWord(std::move(letters), m);
}

Word copy_pattern(const MultisetWord& word, std::size_t k) {
    if (k < 1 || k > word.multiplicity()) throw std::out_of_range("copy index out of range");
    std::vector<std::size_t> seen(word.alphabet_size() + 1, 0);
    Word pattern;
    for (Label a : word.letters())
        if (++seen[a] == k) pattern.push_back(a);
    return pattern;
}

bool is_canon_permutation(const MultisetWord& word) {
    const Word first = copy_pattern(word, 1);
    for (std::size_t k = 2; k <= word.multiplicity(); ++k)
        if (copy_pattern(word, k) != first) return false;
    return true;
}

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
    long height = 0;
    for (char c : steps_) {
        if (c == 'e') ++height;
        else if (c == 'n') --height;
        else throw std::invalid_argument("Dyck path steps must be 'e' or 'n'");
        if (height < 0) throw std::invalid_argument("Dyck path crosses the diagonal");
    }
    if (height != 0) throw std::invalid_argument("Dyck path does not end on the diagonal");
}

std::vector<DyckPath> dyck_paths(std::size_t n) {
    std::vector<DyckPath> result;
    std::string steps;
    auto grow = [&](auto&& self, std::size_t east, std::size_t north) -> void {
        if (north == n) {
            result.emplace_back(steps);
            return;
        }
        if (east < n) {
            steps.push_back('e');
            self(self, east + 1, north);
            steps.pop_back();
        }
        if (north < east) {
            steps.push_back('n');
            self(self, east, north + 1);
            steps.pop_back();
        }
    };
    grow(grow, 0, 0);
    return result;
}

std::vector<std::size_t> high_peak_positions(const DyckPath& path) {
    std::vector<std::size_t> result;
    const auto& s = path.steps();
    long height = 0;  // #e - #n before step i
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == 'e' && s[i + 1] == 'n' && height > 0) result.push_back(i + 1);
        height += s[i] == 'e' ? 1 : -1;
    }
    return result;
}

std::size_t high_peak_count(const DyckPath& path) { return high_peak_positions(path).size(); }

DyckPath dyck_from_linext(const Poset& poset, std::span<const Element> order) {
    if (poset.size() % 2 != 0 || poset.size() == 0 ||
        !(poset == product_with_chain(chain(2), poset.size() / 2)))
        throw std::invalid_argument("expected the poset [2] x [n]");
    if (!is_linear_extension(poset, order))
        throw std::invalid_argument("not a linear extension of [2] x [n]");
    // Under id x id the label of element x is x + 1, so odd labels are the
    // bottom row (even indices).
    std::string steps;
    for (Element x : order) steps.push_back(x % 2 == 0 ? 'e' : 'n');
    return DyckPath(std::move(steps));
}

LinearExtension linext_from_dyck(const DyckPath& path) {
    LinearExtension ext;
    Element next_bottom = 0;
    Element next_top = 1;
    for (char c : path.steps()) {
        if (c == 'e') {
            ext.order.push_back(next_bottom);
            next_bottom += 2;
        } else {
            ext.order.push_back(next_top);
            next_top += 2;
        }
    }
    return ext;
}

RhoDescentData rho_descent_data(std::span<const Element> order, const Labeling& w,
                                std::span<const int> rho, RhoDescentRule rule) {
    RhoDescentData data;
    std::vector<bool> is_descent(order.size() + 1, false);
    for (std::size_t j = 1; j < order.size(); ++j) {
        const Element a = order[j - 1];
        const Element b = order[j];
        bool descent = false;
        switch (rule) {
            case RhoDescentRule::Lexicographic:
                descent = rho[b] < rho[a] || (rho[b] == rho[a] && w(b) < w(a));
                break;
            case RhoDescentRule::EitherDrop:
                descent = w(b) < w(a) || rho[b] < rho[a];
                break;
        }
        if (!descent) continue;
        is_descent[j] = true;
        data.descents.push_back(j);
        if (j == 1 || is_descent[j - 1]) data.double_descents.push_back(j);
    }
    return data;
}

RhoDescentData rho_descent_data(const Poset& checked, const Labeling& w,
                                std::span<const Element> order, RhoDescentRule rule) {
    if (!is_linear_extension(checked, order))
        throw std::invalid_argument("not a linear extension of the given poset");
    const auto rho = rho_values(checked);
    return rho_descent_data(order, w, rho, rule);
}

Labeling phi(const Labeling& sigma) {
    std::vector<Label> values(sigma.size());
    const auto n = static_cast<Label>(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        values[i] = n + 1 - sigma(static_cast<Element>(i));
    return Labeling(std::move(values));
}

LabeledExtension phi_on_extension(const Poset& poset, const Labeling& canon_label,
                                  std::span<const Element> order) {
    if (canon_label.size() != poset.size() || !is_linear_extension(poset, order))
        throw std::invalid_argument("input is not a linear extension of the labeled poset");
    return {LinearExtension{{order.begin(), order.end()}}, phi(canon_label)};
}

}  // namespace canonlab

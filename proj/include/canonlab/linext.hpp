#pragma once

// Linear extensions of finite posets and the descent statistics defined on
// their label words.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "canonlab/config.hpp"
#include "canonlab/poset.hpp"

namespace canonlab {

using Word = std::vector<Label>;

struct LinearExtension {
    std::vector<Element> order;

    bool operator==(const LinearExtension&) const = default;
};

bool is_linear_extension(const Poset& poset, std::span<const Element> order);

// Called once per extension in lexicographic order of element indices.
// Return false to stop the enumeration early.
using ExtensionVisitor = std::function<bool(std::span<const Element>)>;

// Enumerates the extensions that begin with `prefix` (empty: all of them).
// Returns the number of extensions visited. Throws CapExceeded when the poset
// is larger than limits.max_elements and std::invalid_argument when `prefix`
// is not an order ideal listed in a valid order.
std::size_t for_each_linear_extension(const Poset& poset, const ExtensionVisitor& visit,
                                      std::span<const Element> prefix = {},
                                      const Limits& limits = default_limits());

std::vector<LinearExtension> linear_extensions(const Poset& poset,
                                               const Limits& limits = default_limits());

// All valid prefixes of the given length, in lexicographic order. Extensions
// starting with distinct prefixes are disjoint and together exhaust L(P).
std::vector<std::vector<Element>> extension_prefixes(const Poset& poset, std::size_t length);

// e(P) without materializing any extension (dynamic programming over order
// ideals). Requires size <= 64.
mpz_class count_linear_extensions(const Poset& poset);

Word word(std::span<const Element> order, const Labeling& w);

std::vector<std::size_t> descent_set(std::span<const Label> word);  // 1-based positions
std::size_t descent_count(std::span<const Label> word);
std::size_t weak_descent_count(std::span<const Label> word);

// A permutation of {1^m, ..., n^m}.
class MultisetWord {
public:
    MultisetWord(Word letters, std::size_t multiplicity);

    const Word& letters() const noexcept { return letters_; }
    std::size_t multiplicity() const noexcept { return multiplicity_; }
    std::size_t alphabet_size() const noexcept { return letters_.size() / multiplicity_; }
    std::string str() const;

    bool operator==(const MultisetWord&) const = default;

private:
    Word letters_;
    std::size_t multiplicity_;
};

MultisetWord parse_multiset_word(std::string_view digits, std::size_t multiplicity);

// Letter i is ceil(label / m) of the i-th element of the extension.
MultisetWord multiset_word(std::span<const Element> order, const Labeling& canon_label,
                           std::size_t m);

// Subsequence of k-th occurrences (k is 1-based) of each letter.
Word copy_pattern(const MultisetWord& word, std::size_t k);
bool is_canon_permutation(const MultisetWord& word);

// Steps over {'e', 'n'}; every prefix has at least as many e as n.
class DyckPath {
public:
    explicit DyckPath(std::string steps);

    const std::string& steps() const noexcept { return steps_; }
    std::size_t semilength() const noexcept { return steps_.size() / 2; }

    bool operator==(const DyckPath&) const = default;

private:
    std::string steps_;
};

std::vector<DyckPath> dyck_paths(std::size_t n);

// Positions i (1-based) such that steps i, i+1 form a peak off the diagonal.
std::vector<std::size_t> high_peak_positions(const DyckPath& path);
std::size_t high_peak_count(const DyckPath& path);

// Bijection between L([2] x [n]) and Dyck paths of semilength n: odd labels
// under id x id become e-steps, even labels n-steps. Both directions throw
// std::invalid_argument when the input does not have the right shape.
DyckPath dyck_from_linext(const Poset& poset, std::span<const Element> order);
LinearExtension linext_from_dyck(const DyckPath& path);

enum class RhoDescentRule {
    // Compare (rho, label) pairs lexicographically.
    Lexicographic,
    // Label drop or rho drop, read independently.
    EitherDrop,
};

struct RhoDescentData {
    std::vector<std::size_t> descents;         // 1-based positions
    std::vector<std::size_t> double_descents;  // j with j-1 also a descent, or j = 1
};

RhoDescentData rho_descent_data(std::span<const Element> order, const Labeling& w,
                                std::span<const int> rho,
                                RhoDescentRule rule = RhoDescentRule::Lexicographic);
RhoDescentData rho_descent_data(const Poset& checked, const Labeling& w,
                                std::span<const Element> order,
                                RhoDescentRule rule = RhoDescentRule::Lexicographic);

// Entry j -> n + 1 - j.
Labeling phi(const Labeling& sigma);

struct LabeledExtension {
    LinearExtension extension;
    Labeling labeling;

    Word word() const { return canonlab::word(extension.order, labeling); }
};

// Sends pi in L(Q, w x sigma) to the same element order read under
// phi(w) x phi(sigma); the word is the complement v -> N + 1 - v.
// Throws std::invalid_argument if `order` is not an extension of `poset`.
LabeledExtension phi_on_extension(const Poset& poset, const Labeling& canon_label,
                                  std::span<const Element> order);

}  // namespace canonlab

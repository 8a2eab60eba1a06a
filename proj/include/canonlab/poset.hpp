#pragma once

// Finite posets stored as irredundant cover relations, their labelings, and
// the product constructions used to build canon labelings.
//
// Element layout of a product P x [n]: element (p, j), with p a 0-based index
// into P and j a 1-based copy number, has index p + (j - 1) * |P|. A checked
// product appends n pairwise incomparable elements at indices |P|*n .. |P|*n+n-1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace canonlab {

using Element = std::uint32_t;
using Label = std::uint32_t;

struct Cover {
    Element lower;
    Element upper;

    auto operator<=>(const Cover&) const = default;
};

class PosetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when covers contain a directed cycle; carries the cycle.
class CycleError : public PosetError {
public:
    explicit CycleError(std::vector<Element> cycle);
    const std::vector<Element>& cycle() const noexcept { return cycle_; }

private:
    std::vector<Element> cycle_;
};

class Poset {
public:
    Poset() = default;

    // Validates index range, acyclicity and irredundancy. Covers are stored
    // sorted lexicographically; duplicates are rejected.
    Poset(std::size_t element_count, std::vector<Cover> covers);

    // Builds the poset generated by arbitrary relations a < b by taking the
    // transitive reduction. Cycles are still an error.
    static Poset from_relations(std::size_t element_count, std::vector<Cover> relations);

    std::size_t size() const noexcept { return element_count_; }
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    const std::vector<Element>& upper_covers(Element x) const { return up_[x]; }
    const std::vector<Element>& lower_covers(Element x) const { return down_[x]; }

    bool has_cover(Element lower, Element upper) const;
    // Strict order a < b.
    bool less(Element a, Element b) const;

    std::vector<Element> minimal_elements() const;
    std::vector<Element> maximal_elements() const;

    bool operator==(const Poset& other) const {
        return element_count_ == other.element_count_ && covers_ == other.covers_;
    }

private:
    void index_covers();

    std::size_t element_count_ = 0;
    std::vector<Cover> covers_;
    std::vector<std::vector<Element>> up_;
    std::vector<std::vector<Element>> down_;
    std::vector<std::vector<bool>> below_;  // below_[b][a] iff a < b
};

// A bijection from elements to 1..N. values()[x] is the label of element x.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> values);

    static Labeling identity(std::size_t n);
    // i -> n + 1 - i, the reverse natural labeling of a chain.
    static Labeling reversed(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    Label operator()(Element x) const { return values_[x]; }
    const std::vector<Label>& values() const noexcept { return values_; }

    bool operator==(const Labeling&) const = default;

private:
    std::vector<Label> values_;
};

// An inter-copy cover (p, j) < (p, j + 1) of P x [n]; p and j are 1-based.
struct CopyEdge {
    std::size_t p;
    std::size_t j;

    auto operator<=>(const CopyEdge&) const = default;
};

struct ChainDescents {
    std::vector<Element> chain;
    std::size_t descents;
};

struct ChainDescentProfile {
    std::vector<ChainDescents> per_chain;
    std::optional<std::size_t> constant_k;  // set iff all chains agree
};

struct ShiftVector {
    std::vector<long> t;
    long k = 0;
};

Poset chain(std::size_t m);
Poset antichain(std::size_t n);
// One bottom element covered by two tops.
Poset v_poset();
// Two bottoms covered by one top.
Poset lambda_poset();

Poset product_with_chain(const Poset& base, std::size_t n);
Poset checked_product(const Poset& base, std::size_t n);

// (w x sigma)(p, j) = w(p) + (sigma(j) - 1) * |P|; sigma given in one-line notation.
Labeling canon_labeling(const Labeling& w, const Labeling& sigma);
// canon_labeling(w, id) on the product, then |P|n+1, ..., (|P|+1)n on the tops.
Labeling checked_labeling(const Labeling& w, std::size_t n);

// Deletes the named inter-copy covers from a product built over a base of
// `base_size` elements. Throws PosetError if an edge is out of range or not
// a cover of `product`.
Poset remove_intercopy_covers(const Poset& product, std::size_t base_size,
                              std::span<const CopyEdge> removed);

// All saturated chains from a minimal to a maximal element.
std::vector<std::vector<Element>> maximal_chains(const Poset& poset);

bool is_graded(const Poset& poset);
// Labels every element by its position in the lexicographically first
// linear extension; order-preserving by construction.
Labeling natural_labeling(const Poset& poset);
bool is_natural(const Poset& poset, const Labeling& w);

ChainDescentProfile chain_descent_profile(const Poset& poset, const Labeling& w);

// Descent shift between two labelings: t vanishes on minimal elements,
// changes by [w(a)>w(b)] - [w2(a)>w2(b)] along each cover a < b, and is
// constant (= k) on maximal elements. Absent if no such t exists.
std::optional<ShiftVector> descent_shift_vector(const Poset& poset, const Labeling& w,
                                                const Labeling& w2);

// Parity of the length of maximal chains in the principal ideal of q.
// Throws PosetError if the poset is not graded.
int rho(const Poset& poset, Element q);
std::vector<int> rho_values(const Poset& poset);

}  // namespace canonlab

#pragma once

// Canon polynomials, dissonant canon polynomials over amphibian subposets,
// and the identity checks that relate them to Eulerian and h* polynomials.
//
// Definitional sums (over all of S_n, over all linear extensions) are the
// reference; closed forms are compared against them through IdentityReport.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "canonlab/config.hpp"
#include "canonlab/linext.hpp"
#include "canonlab/polynomial.hpp"
#include "canonlab/poset.hpp"

namespace canonlab {

struct CanonOptions {
    unsigned jobs = 1;
    Limits limits = default_limits();
    // Lifts limits.max_canon_size and limits.max_sweep_edges.
    bool force = false;
};

class NotConstantDescent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct IdentityReport {
    std::string name;
    IntPolynomial lhs;
    IntPolynomial rhs;
    bool holds = false;
    std::optional<std::string> witness;  // first mismatch, when !holds
    std::string detail;
};

IdentityReport compare_polynomials(std::string name, IntPolynomial lhs, IntPolynomial rhs,
                                   std::string detail = {});

// All of S_n in lexicographic order, as one-line labelings.
std::vector<Labeling> permutations(std::size_t n);

// The k shared by every maximal chain of (P, w); throws NotConstantDescent.
std::size_t constant_descents(const Poset& poset, const Labeling& w);

// Sum over sigma in S_n of h*(P x [n], w x sigma).
IntPolynomial canon_polynomial_bruteforce(const Poset& poset, const Labeling& w, std::size_t n,
                                          const CanonOptions& options = {});
// x^k A_n(x) h*(P x [n]) for constant-descent (P, w).
IntPolynomial canon_polynomial_product(const Poset& poset, const Labeling& w, std::size_t n,
                                       const CanonOptions& options = {});

IdentityReport checked_product_identity(const Poset& poset, const Labeling& w, std::size_t n,
                                        const CanonOptions& options = {});
// Sum over linear extensions sigma of the naturally labeled `shape` of
// h*(P x [n], w x sigma), against x^k h*(shape) h*(P x [n]); n = |shape|.
IdentityReport generalized_product_identity(const Poset& poset, const Labeling& w,
                                            const Poset& shape, const CanonOptions& options = {});

// Subposet of [m] x [n] with some inter-copy covers removed.
struct AmphibianSpec {
    std::size_t m = 1;
    std::size_t n = 1;
    std::vector<CopyEdge> removed;

    Poset poset() const;
};

enum class RemovalMode {
    FixedRow,   // some row p keeps all of its inter-copy covers
    Arbitrary,
};

RemovalMode removal_mode(const AmphibianSpec& spec);
const char* to_string(RemovalMode mode);

// Removable edges are indexed row-major over (p, j): bit (p-1)(n-1) + (j-1).
std::size_t removable_edge_count(std::size_t m, std::size_t n);
std::vector<CopyEdge> edges_from_mask(std::size_t m, std::size_t n, std::uint64_t mask);
std::uint64_t mask_from_edges(std::size_t m, std::size_t n, std::span<const CopyEdge> edges);

// Sum over sigma in S_n of h*(Q, w x sigma).
IntPolynomial dissonant_polynomial(const Poset& base, const Labeling& w, std::size_t n,
                                   std::span<const CopyEdge> removed,
                                   const CanonOptions& options = {});
IntPolynomial dissonant_polynomial(const AmphibianSpec& spec, const Labeling& w,
                                   const CanonOptions& options = {});

// deg C^{Q,w} against m(n-1)+k.
IdentityReport dissonant_degree_check(const AmphibianSpec& spec, const Labeling& w,
                                      const CanonOptions& options = {});
// C^{Q,w} against its reflection over 0..m(n-1)+2k.
IdentityReport dissonant_palindromy_check(const AmphibianSpec& spec, const Labeling& w,
                                          const CanonOptions& options = {});
// h*(Q, w x sigma) against x^k h*(Q, id x sigma).
IdentityReport dissonant_shift_identity(const AmphibianSpec& spec, const Labeling& w,
                                        const Labeling& sigma, const CanonOptions& options = {});
// x^{des w} x^{mn-1} h*(Q, w x sigma)(1/x) against x^{des phi(w)} h*(Q, w x phi(sigma)).
IdentityReport summand_reciprocity(const AmphibianSpec& spec, const Labeling& w,
                                   const Labeling& sigma, const CanonOptions& options = {});

struct WeakDescentResult {
    IntPolynomial by_weak_descents;    // sum of x^wdes over canon permutations
    IntPolynomial by_reverse_labeling; // canon polynomial of ([m], u)
};

WeakDescentResult weak_descent_routes(std::size_t m, std::size_t n,
                                      const CanonOptions& options = {});
// Throws std::logic_error when the two routes disagree.
IntPolynomial weak_descent_polynomial(std::size_t m, std::size_t n,
                                      const CanonOptions& options = {});

// Canon permutation carried by an extension of [m] checked-x [n] (natural
// labels): the letter of copy j is the j-th top element read.
MultisetWord canon_word_from_checked_extension(std::span<const Element> order, std::size_t m,
                                               std::size_t n);

struct GammaInterpretation {
    std::size_t m = 0;
    std::size_t n = 0;
    RhoDescentRule rule = RhoDescentRule::Lexicographic;
    std::size_t stated_offset = 0;              // floor((m + n - 1) / 2)
    std::optional<std::size_t> empirical_offset;  // offset that reproduces gamma, if any
    // Extensions with no double rho-descents and the final-pair condition,
    // bucketed by their number of rho-descents.
    std::vector<std::size_t> histogram;
    std::vector<mpz_class> counts;  // counts[i] = histogram[i + stated_offset]
    GammaExpansion expected;
    bool matches = false;
    // Qualifying extensions per gamma index under the stated offset.
    std::vector<std::vector<LinearExtension>> classes;
};

GammaInterpretation gamma_interpretation_counts(std::size_t m, std::size_t n,
                                                RhoDescentRule rule = RhoDescentRule::Lexicographic,
                                                const CanonOptions& options = {});

struct SweepRow {
    std::uint64_t mask = 0;
    std::vector<CopyEdge> removed;
    RemovalMode mode = RemovalMode::FixedRow;
    IntPolynomial polynomial;
    std::size_t window_high = 0;
    bool palindromic = false;
    std::optional<GammaExpansion> gamma;
    bool gamma_positive = false;
    bool unimodal = false;
};

struct Certificate {
    AmphibianSpec spec;
    IntPolynomial polynomial;
    std::optional<GammaExpansion> gamma;
    std::string violation;
};

struct SweepReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<SweepRow> rows;
    std::vector<Certificate> counterexamples;
    std::vector<std::string> inconsistencies;

    bool consistent() const { return inconsistencies.empty(); }
};

// Every subset of removable edges of [m] x [n], w = id.
SweepReport conjecture_sweep(std::size_t m, std::size_t n, const CanonOptions& options = {});

// Named identity checks, one per statement; see statement_names().
struct StatementInput {
    std::size_t m = 2;
    std::size_t n = 2;
    std::optional<Poset> poset;        // replaces [m] where the statement allows
    std::optional<Labeling> labeling;  // labeling of `poset`
    std::optional<std::vector<CopyEdge>> removed;  // one subposet instead of all
};

const std::vector<std::string_view>& statement_names();
std::vector<IdentityReport> verify_statement(std::string_view name, const StatementInput& input,
                                             const CanonOptions& options = {});

}  // namespace canonlab

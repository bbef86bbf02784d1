#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ietlab/gn.hpp"
#include "ietlab/iet.hpp"
#include "ietlab/words.hpp"

namespace ietlab {

/// Exact product of the generator IETs in word order (the rightmost factor
/// acts first). Throws InputError on undeclared names.
Iet word_evaluate(const GeneratorSet& gens, const Word& word);

struct RelatorResult {
    Word relator;
    bool holds;
    std::optional<AlgebraicNumber> witness;  // exact point moved by the relator on failure
};

struct RelationReport {
    std::vector<RelatorResult> items;
    bool all_hold = true;
};

/// Verifies every relator of the presentation exactly.
RelationReport relation_check(const GeneratorSet& gens);

struct FreeReport {
    long depth = 0;
    bool free = true;
    std::optional<Word> violation;
    std::string reason;       // describes the violation kind
    long element_count = 0;   // distinct IETs in the ball
    long word_count = 0;      // reduced words enumerated
};

/// Breadth-first enumeration of reduced words of length <= depth with exact
/// IET deduplication. A violation is a nonidentity element with a fixed
/// point, or — when no presentation is supplied, so the abstract group is
/// free over the generators — a nonempty word collapsing to the identity.
/// With `also_periodic` set, every nonidentity element is additionally
/// required to be free of periodic points up to the given bound.
FreeReport free_up_to(const GeneratorSet& gens, long depth, bool also_periodic = false,
                      long periodic_bound = 20);

/// Sizes of the balls B(1) .. B(depth) under exact element deduplication
/// (the image group in the IET group, not the abstract group).
std::vector<long> ball_growth(const GeneratorSet& gens, long depth);

// --- wreath-style embedding -------------------------------------------------

/// The finite permutation group F enumerated from its generators together
/// with the block data of the embedding of A^F x| F into G_{#F}: block i of
/// length 1/#F carries the F-element elements[i], and (a_s, sigma) acts by
/// (x, s) -> (a_s(x), sigma s).
struct WreathEmbedding {
    std::vector<Permutation> elements;  // F, identity first (BFS order)
    GeneratorSet generators;            // diagonal rotations + left translations by F-generators
    int block_count = 0;
};

/// Builds the embedding for A = the rotations by the given angles (required
/// to be Q-independent together with 1) and F = <f_generators> (required
/// nontrivial). The returned generator set realizes the free action of
/// A x F: each angle maps to the diagonal element (R_a, ..., R_a; id), each
/// F-generator to (0, ..., 0; left multiplication).
WreathEmbedding wreath_embedding(const FieldPtr& field, const std::vector<AlgebraicNumber>& angles,
                                 const std::vector<Permutation>& f_generators);

/// The element E((a_s), sigma) of G_{#F} for an arbitrary vector of circle
/// rotation angles (one per F-element, angles in [0,1)) and sigma in F.
/// Satisfies E(a, s) o E(a', s') = E((a_{s' r} + a'_r)_r, s s') exactly.
GnElem wreath_element(const WreathEmbedding& embedding,
                      const std::vector<AlgebraicNumber>& rotation_angles, const Permutation& sigma);

// --- the two torsion-by-rotation families ------------------------------------

/// Family data for the translation-form morphism: every element of the
/// group writes as x -> x + ell * alpha + p(x)/n with a single integer ell.
struct EllFamily {
    int n;                  // 3 for the metabelian family, n for the alternating one
    AlgebraicNumber alpha;  // the defining irrational rotation angle
};

struct EllResult {
    long ell;
    // Per canonical interval of the map: left endpoint, right endpoint, p value.
    std::vector<std::tuple<AlgebraicNumber, AlgebraicNumber, long>> p_table;
};

/// Extracts ell(f) and the local p values from the exact translations, or
/// nullopt when some translation is not of the form ell*alpha + p/n
/// (evidence that f is outside the family's group).
std::optional<EllResult> ell_morphism(const EllFamily& family, const Iet& f);

/// The local permutation of f at x in [0, 1/n): the permutation omega with
/// f([x + (p-1)/n, x + (p-1)/n + beta)) = the omega(p)-th such interval,
/// for every small enough beta > 0. Defined for maps whose translations all
/// lie in (1/n)Z; beta is chosen as half the minimal gap from the
/// x-translates to the break points of f. Returns nullopt when the
/// translation-set precondition fails.
std::optional<Permutation> local_permutation(const Iet& f, const AlgebraicNumber& x, int n);

/// The IET associated to a permutation of the n equal blocks (trivial
/// rotation vector).
Iet block_translation(const FieldPtr& field, const Permutation& a);

// --- built-in generator sets -------------------------------------------------

/// Baumslag-Solitar BS(1,-1) witness in G_2: a = ((alpha, -alpha), id),
/// b = ((beta1, beta2), (1 2)), with 1, alpha, beta1, beta2 Q-independent.
GeneratorSet make_bs11(const FieldPtr& field, const AlgebraicNumber& alpha,
                       const AlgebraicNumber& beta1, const AlgebraicNumber& beta2);

/// Crystallographic witness in G_4: a = ((0, alpha, -alpha, 0), (13)(24)),
/// b = ((beta, 0, -beta, 0), (14)(23)), with 1, alpha, beta Q-independent
/// and alpha, beta in (0, 1/4).
GeneratorSet make_crystallographic(const FieldPtr& field, const AlgebraicNumber& alpha,
                                   const AlgebraicNumber& beta);

/// Metabelian family <R_alpha, g>: g exchanges the outer thirds
/// (translations +2/3, 0, -2/3), alpha irrational in (0, 1/3).
GeneratorSet make_metabelian3(const FieldPtr& field, const AlgebraicNumber& alpha);

/// Alternating family <A_n, R_alpha> for n >= 5: R_alpha plus the block
/// translations of a two-element generating set of A_n, alpha irrational in
/// (0, 1/n).
GeneratorSet make_alternating(const FieldPtr& field, int n, const AlgebraicNumber& alpha);

/// Dispatch by family name: "bs11", "crystallographic", "metabelian3",
/// "alternating". Unknown parameter names throw InputError.
GeneratorSet make_builtin(const std::string& name, const FieldPtr& field,
                          const std::map<std::string, AlgebraicNumber>& params, int n = 5);

/// Searches exponents 1 <= p, q <= cap with f^p and g^q commuting.
std::optional<std::pair<long, long>> commuting_powers(const Iet& f, const Iet& g, long cap);

/// Closure of the given permutations under composition (breadth-first,
/// deterministic order, identity first).
std::vector<Permutation> permutation_group_closure(int n, const std::vector<Permutation>& generators);

/// True when the closure of `generators` is exactly the alternating group A_n.
bool generates_alternating(int n, const std::vector<Permutation>& generators);

}  // namespace ietlab

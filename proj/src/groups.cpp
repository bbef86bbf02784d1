#include "ietlab/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ietlab/dynamics.hpp"

namespace ietlab {

Iet word_evaluate(const GeneratorSet& gens, const Word& word) {
    if (!gens.field()) throw InputError("generator set has no field context");
    Iet out = Iet::identity(gens.field());
    for (const auto& [name, exponent] : word.syllables()) {
        const Iet* gen = gens.find(name);
        if (!gen) throw InputError("undeclared generator '" + name + "'");
        out = out.after(gen->power(exponent));
    }
    return out;
}

RelationReport relation_check(const GeneratorSet& gens) {
    if (!gens.has_presentation()) throw InputError("generator set carries no presentation");
    RelationReport report;
    for (const Word& relator : gens.relators()) {
        Iet value = word_evaluate(gens, relator);
        RelatorResult item{relator, value.is_identity(), std::nullopt};
        if (!item.holds) {
            // Exact witness: the left endpoint of the first moved interval.
            for (std::size_t i = 0; i < value.cuts().size(); ++i) {
                if (!value.translations()[i].is_zero()) {
                    item.witness = value.cuts()[i];
                    break;
                }
            }
            report.all_hold = false;
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

namespace {

struct BallEntry {
    Iet value;
    Word word;
};

// Breadth-first enumeration of the image group ball with exact IET
// deduplication; visit() sees each distinct element once (shortest word).
template <typename Visit>
void enumerate_ball(const GeneratorSet& gens, long depth, std::vector<long>& sizes, Visit visit) {
    std::map<Iet, Word, IetStructLess> seen;
    Iet id = Iet::identity(gens.field());
    seen.emplace(id, Word());
    std::deque<BallEntry> frontier;
    frontier.push_back({id, Word()});
    sizes.clear();

    std::vector<std::pair<std::string, Iet>> steps;
    for (const auto& [name, gen] : gens.generators()) {
        steps.emplace_back(name, gen);
        steps.emplace_back(name, gen.inverse());
    }

    for (long level = 1; level <= depth; ++level) {
        std::deque<BallEntry> next;
        for (const auto& entry : frontier) {
            for (std::size_t s = 0; s < steps.size(); ++s) {
                const auto& [name, step] = steps[s];
                long exponent = (s % 2 == 0) ? 1 : -1;
                // Skip immediate cancellation (non-reduced words).
                if (!entry.word.syllables().empty()) {
                    const auto& last = entry.word.syllables().back();
                    if (last.first == name && (last.second > 0) != (exponent > 0)) continue;
                }
                Word word = entry.word;
                word.append(name, exponent);
                Iet value = step.after(entry.value);
                auto [it, fresh] = seen.emplace(value, word);
                if (fresh) {
                    visit(value, word);
                    next.push_back({std::move(value), std::move(word)});
                }
            }
        }
        frontier = std::move(next);
        sizes.push_back(static_cast<long>(seen.size()));
    }
}

}  // namespace

FreeReport free_up_to(const GeneratorSet& gens, long depth, bool also_periodic, long periodic_bound) {
    if (depth < 1) throw InputError("freeness depth must be >= 1");
    FreeReport report;
    report.depth = depth;
    long words = 1;
    std::vector<long> sizes;
    enumerate_ball(gens, depth, sizes, [&](const Iet& value, const Word& word) {
        ++words;
        if (!report.free) return;
        if (value.is_identity()) {
            // A nonempty word collapsing to the identity is a violation only
            // when the abstract group is the free group over the generators;
            // a supplied presentation declares such collapses expected.
            if (!gens.has_presentation()) {
                report.free = false;
                report.violation = word;
                report.reason = "nonempty word evaluates to the identity (fixed set [0, 1))";
            }
            return;
        }
        if (!value.fixed_set().empty()) {
            report.free = false;
            report.violation = word;
            report.reason = "nonidentity element with fixed points";
            return;
        }
        if (also_periodic) {
            PeriodicSearchResult search = periodic_points_up_to(value, periodic_bound);
            if (search.kind == PeriodicSearchResult::Kind::found) {
                report.free = false;
                report.violation = word;
                report.reason = "nonidentity element with periodic points (period " +
                                std::to_string(search.period) + ")";
            }
        }
    });
    report.word_count = words;
    report.element_count = sizes.empty() ? 1 : sizes.back();
    return report;
}

std::vector<long> ball_growth(const GeneratorSet& gens, long depth) {
    if (depth < 1) throw InputError("ball depth must be >= 1");
    std::vector<long> sizes;
    enumerate_ball(gens, depth, sizes, [](const Iet&, const Word&) {});
    return sizes;
}

std::vector<Permutation> permutation_group_closure(int n, const std::vector<Permutation>& generators) {
    std::set<Permutation> seen;
    std::vector<Permutation> order;
    Permutation id = Permutation::identity(n);
    seen.insert(id);
    order.push_back(id);
    std::deque<Permutation> frontier{id};
    while (!frontier.empty()) {
        Permutation current = frontier.front();
        frontier.pop_front();
        for (const auto& gen : generators) {
            if (gen.size() != n) throw InputError("permutation generator size mismatch");
            Permutation next = gen * current;
            if (seen.insert(next).second) {
                order.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    return order;
}

bool generates_alternating(int n, const std::vector<Permutation>& generators) {
    for (const auto& g : generators)
        if (!g.is_even()) return false;
    long half_factorial = 1;
    for (long k = 3; k <= n; ++k) half_factorial *= k;  // n!/2
    return static_cast<long>(permutation_group_closure(n, generators).size()) == half_factorial;
}

WreathEmbedding wreath_embedding(const FieldPtr& field, const std::vector<AlgebraicNumber>& angles,
                                 const std::vector<Permutation>& f_generators) {
    if (angles.empty()) throw InputError("wreath embedding needs at least one rotation angle");
    if (f_generators.empty()) throw InputError("wreath embedding needs generators for F");

    std::vector<AlgebraicNumber> with_one{field->one()};
    for (const auto& a : angles) with_one.push_back(a);
    if (q_linear_rank(with_one) != static_cast<int>(with_one.size()))
        throw InputError("independence constraint violated: 1 and the rotation angles must be Q-independent");

    int degree = f_generators[0].size();
    WreathEmbedding embedding;
    embedding.elements = permutation_group_closure(degree, f_generators);
    embedding.block_count = static_cast<int>(embedding.elements.size());
    if (embedding.block_count < 2) throw InputError("F must be a nontrivial finite group");

    embedding.generators = GeneratorSet(field);
    int k = embedding.block_count;
    for (std::size_t j = 0; j < angles.size(); ++j) {
        std::vector<AlgebraicNumber> diagonal(static_cast<std::size_t>(k), angles[j].mod1());
        GnElem elem = wreath_element(embedding, diagonal, Permutation::identity(degree));
        embedding.generators.add_generator("r" + std::to_string(j + 1), gn_embed(elem));
    }
    std::vector<AlgebraicNumber> zeros(static_cast<std::size_t>(k), field->zero());
    for (std::size_t j = 0; j < f_generators.size(); ++j) {
        GnElem elem = wreath_element(embedding, zeros, f_generators[j]);
        embedding.generators.add_generator("f" + std::to_string(j + 1), gn_embed(elem));

        // Relators of the realized group A x F: F-generator orders and
        // commutation with the diagonal rotations.
        Word order_rel;
        order_rel.append("f" + std::to_string(j + 1), f_generators[j].order());
        embedding.generators.add_relator(order_rel);
        for (std::size_t i = 0; i < angles.size(); ++i) {
            Word c;
            c.append("r" + std::to_string(i + 1), 1);
            c.append("f" + std::to_string(j + 1), 1);
            c.append("r" + std::to_string(i + 1), -1);
            c.append("f" + std::to_string(j + 1), -1);
            embedding.generators.add_relator(c);
        }
    }
    return embedding;
}

GnElem wreath_element(const WreathEmbedding& embedding,
                      const std::vector<AlgebraicNumber>& rotation_angles, const Permutation& sigma) {
    int k = embedding.block_count;
    if (static_cast<int>(rotation_angles.size()) != k)
        throw InputError("wreath element needs one rotation angle per F-element");
    std::vector<AlgebraicNumber> alpha;
    std::vector<int> images;
    alpha.reserve(static_cast<std::size_t>(k));
    images.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        // Block i carries the copy of [0, 1) labeled by F-element s_i; the
        // circle rotation angle scales by the block length.
        alpha.push_back(rotation_angles[static_cast<std::size_t>(i)].mod1() / Rational(k));
        Permutation target = sigma * embedding.elements[static_cast<std::size_t>(i)];
        auto it = std::find(embedding.elements.begin(), embedding.elements.end(), target);
        if (it == embedding.elements.end()) throw InputError("sigma does not belong to F");
        images.push_back(static_cast<int>(it - embedding.elements.begin()));
    }
    return GnElem(k, std::move(alpha), Permutation::from_images(std::move(images)));
}

std::optional<EllResult> ell_morphism(const EllFamily& family, const Iet& f) {
    if (family.n < 2) throw InputError("family block count must be >= 2");
    if (family.alpha.is_rational()) throw InputError("family angle must be irrational");
    const auto& alpha = family.alpha;

    // Candidate ell from the irrational parts of the first non-rational
    // translation: t = ell*alpha + p/n forces t_irr = ell * alpha_irr.
    std::optional<long> ell;
    for (const auto& t : f.translations()) {
        if (t.is_rational()) continue;
        const auto& ac = alpha.coeffs();
        const auto& tc = t.coeffs();
        std::size_t pivot = 1;
        while (pivot < ac.size() && ac[pivot] == 0) ++pivot;
        if (pivot == ac.size()) return std::nullopt;
        Rational ratio = tc[pivot] / ac[pivot];
        if (ratio.get_den() != 1) return std::nullopt;
        ell = static_cast<long>(ratio.get_num().get_si());
        break;
    }
    if (!ell) ell = 0;

    EllResult result;
    result.ell = *ell;
    for (std::size_t i = 0; i < f.cuts().size(); ++i) {
        AlgebraicNumber remainder = f.translations()[i] - alpha * Rational(*ell);
        if (!remainder.is_rational()) return std::nullopt;
        Rational scaled = remainder.rational_value() * Rational(family.n);
        if (scaled.get_den() != 1) return std::nullopt;
        result.p_table.emplace_back(f.cuts()[i], f.interval_end(static_cast<int>(i)),
                                    static_cast<long>(scaled.get_num().get_si()));
    }
    return result;
}

std::optional<Permutation> local_permutation(const Iet& f, const AlgebraicNumber& x, int n) {
    if (n < 1) throw InputError("local permutation needs n >= 1");
    const FieldPtr& field = f.field();
    AlgebraicNumber block = field->element(Rational(1, n));
    if (x.sign() < 0 || !(x < block)) throw InputError("base point must lie in [0, 1/n)");
    for (const auto& t : f.translations()) {
        if (!t.is_rational()) return std::nullopt;
        Rational scaled = t.rational_value() * Rational(n);
        if (scaled.get_den() != 1) return std::nullopt;
    }

    // The translates x + (p-1)/n and the images they must match.
    std::vector<AlgebraicNumber> translates;
    for (int p = 0; p < n; ++p) translates.push_back(x + Rational(p, n));

    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        AlgebraicNumber y = f.evaluate(translates[static_cast<std::size_t>(p)]);
        AlgebraicNumber offset = (y - x) * Rational(n);
        if (!offset.is_rational()) return std::nullopt;
        Rational q = offset.rational_value();
        if (q.get_den() != 1) return std::nullopt;
        long target = q.get_num().get_si();
        if (target < 0 || target >= n) return std::nullopt;
        images.push_back(static_cast<int>(target));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
        if (seen[static_cast<std::size_t>(v)]) return std::nullopt;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation::from_images(std::move(images));
}

Iet block_translation(const FieldPtr& field, const Permutation& a) {
    int n = a.size();
    std::vector<AlgebraicNumber> cuts;
    std::vector<AlgebraicNumber> trans;
    for (int i = 0; i < n; ++i) {
        cuts.push_back(field->element(Rational(i, n)));
        trans.push_back(field->element(Rational(a(i) - i, n)));
    }
    return Iet::create(std::move(cuts), std::move(trans));
}

namespace {

void require_independent(const std::vector<AlgebraicNumber>& values, const std::string& what) {
    if (q_linear_rank(values) != static_cast<int>(values.size()))
        throw InputError("independence constraint violated: " + what +
                         " must be Q-linearly independent (rank " +
                         std::to_string(q_linear_rank(values)) + " of " +
                         std::to_string(values.size()) + ")");
}

void require_in_open_interval(const AlgebraicNumber& value, const Rational& lo, const Rational& hi,
                              const std::string& name) {
    const FieldPtr& field = value.field();
    if (!(field->element(lo) < value) || !(value < field->element(hi)))
        throw InputError("interval constraint violated: " + name + " must lie in (" +
                         rational_to_string(lo) + ", " + rational_to_string(hi) + ")");
}

}  // namespace

GeneratorSet make_bs11(const FieldPtr& field, const AlgebraicNumber& alpha,
                       const AlgebraicNumber& beta1, const AlgebraicNumber& beta2) {
    require_independent({field->one(), alpha, beta1, beta2}, "1, alpha, beta1, beta2");
    require_in_open_interval(alpha, Rational(0), Rational(1, 2), "alpha");
    require_in_open_interval(beta1, Rational(0), Rational(1, 2), "beta1");
    require_in_open_interval(beta2, Rational(0), Rational(1, 2), "beta2");

    GnElem a(2, {alpha, -alpha}, Permutation::identity(2));
    GnElem b(2, {beta1, beta2}, Permutation::from_one_based({2, 1}));
    GeneratorSet gens(field);
    gens.add_generator("a", gn_embed(a));
    gens.add_generator("b", gn_embed(b));
    gens.add_relator(Word::parse("b a b^-1 a"));  // b a b^-1 = a^-1
    return gens;
}

GeneratorSet make_crystallographic(const FieldPtr& field, const AlgebraicNumber& alpha,
                                   const AlgebraicNumber& beta) {
    require_independent({field->one(), alpha, beta}, "1, alpha, beta");
    require_in_open_interval(alpha, Rational(0), Rational(1, 4), "alpha");
    require_in_open_interval(beta, Rational(0), Rational(1, 4), "beta");

    AlgebraicNumber zero = field->zero();
    GnElem a(4, {zero, alpha, -alpha, zero}, Permutation::from_one_based({3, 4, 1, 2}));
    GnElem b(4, {beta, zero, -beta, zero}, Permutation::from_one_based({4, 3, 2, 1}));
    GeneratorSet gens(field);
    gens.add_generator("a", gn_embed(a));
    gens.add_generator("b", gn_embed(b));
    gens.add_relator(Word::parse("b a^2 b^-1 a^2"));  // b a^2 b^-1 = a^-2
    gens.add_relator(Word::parse("a b^2 a^-1 b^2"));  // a b^2 a^-1 = b^-2
    return gens;
}

GeneratorSet make_metabelian3(const FieldPtr& field, const AlgebraicNumber& alpha) {
    require_independent({field->one(), alpha}, "1, alpha");
    require_in_open_interval(alpha, Rational(0), Rational(1, 3), "alpha");

    GeneratorSet gens(field);
    gens.add_generator("r", Iet::rotation(alpha));
    gens.add_generator("g", block_translation(field, Permutation::from_one_based({3, 2, 1})));
    gens.add_relator(Word::parse("g^2"));
    return gens;
}

GeneratorSet make_alternating(const FieldPtr& field, int n, const AlgebraicNumber& alpha) {
    if (n < 5) throw InputError("alternating family needs n >= 5");
    require_independent({field->one(), alpha}, "1, alpha");
    require_in_open_interval(alpha, Rational(0), Rational(1, n), "alpha");

    // A_n = <(1 2 3), long cycle>: the n-cycle for odd n, the (n-1)-cycle
    // fixing 1 for even n.
    Permutation three = Permutation::from_cycles(n, {{0, 1, 2}});
    std::vector<int> cycle;
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cycle.push_back(i);
    } else {
        for (int i = 1; i < n; ++i) cycle.push_back(i);
    }
    Permutation big = Permutation::from_cycles(n, {cycle});

    GeneratorSet gens(field);
    gens.add_generator("r", Iet::rotation(alpha));
    gens.add_generator("s", block_translation(field, three));
    gens.add_generator("c", block_translation(field, big));
    Word s3;
    s3.append("s", 3);
    gens.add_relator(s3);
    Word ck;
    ck.append("c", big.order());
    gens.add_relator(ck);
    return gens;
}

GeneratorSet make_builtin(const std::string& name, const FieldPtr& field,
                          const std::map<std::string, AlgebraicNumber>& params, int n) {
    // Defaults are powers of theta scaled into the valid parameter ranges.
    AlgebraicNumber theta = field->theta();
    auto get = [&](const std::string& key, const AlgebraicNumber& fallback) {
        auto it = params.find(key);
        return it != params.end() ? it->second : fallback;
    };
    auto check_keys = [&](std::set<std::string> known) {
        for (const auto& [key, value] : params)
            if (!known.count(key))
                throw InputError("unknown parameter '" + key + "' for builtin '" + name + "'");
    };
    if (name == "bs11") {
        check_keys({"alpha", "beta1", "beta2"});
        return make_bs11(field, get("alpha", theta / Rational(4)),
                         get("beta1", theta.pow(2) / Rational(4)),
                         get("beta2", theta.pow(3) / Rational(4)));
    }
    if (name == "crystallographic") {
        check_keys({"alpha", "beta"});
        return make_crystallographic(field, get("alpha", theta / Rational(8)),
                                     get("beta", theta.pow(2) / Rational(8)));
    }
    if (name == "metabelian3") {
        check_keys({"alpha"});
        return make_metabelian3(field, get("alpha", theta / Rational(8)));
    }
    if (name == "alternating") {
        check_keys({"alpha"});
        return make_alternating(field, n, get("alpha", theta / Rational(8)));
    }
    throw InputError("unknown builtin '" + name +
                     "' (available: bs11, crystallographic, metabelian3, alternating)");
}

std::optional<std::pair<long, long>> commuting_powers(const Iet& f, const Iet& g, long cap) {
    std::vector<Iet> f_powers;
    std::vector<Iet> g_powers;
    Iet fp = f;
    Iet gp = g;
    for (long i = 1; i <= cap; ++i) {
        f_powers.push_back(fp);
        g_powers.push_back(gp);
        if (i < cap) {
            fp = fp.after(f);
            gp = gp.after(g);
        }
    }
    for (long p = 1; p <= cap; ++p)
        for (long q = 1; q <= cap; ++q)
            if (commute_check(f_powers[static_cast<std::size_t>(p - 1)],
                              g_powers[static_cast<std::size_t>(q - 1)]))
                return std::make_pair(p, q);
    return std::nullopt;
}

}  // namespace ietlab

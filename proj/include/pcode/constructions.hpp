#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pcode/codes.hpp"
#include "pcode/ffield.hpp"

namespace pcode {

enum class Family { Dihedral8n, FieldC2, FieldAGammaL, SymChain, IntransitiveMax, Affine };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Dihedral8n: return "dihedral";
        case Family::FieldC2: return "fieldc2";
        case Family::FieldAGammaL: return "agammal";
        case Family::SymChain: return "symchain";
        case Family::IntransitiveMax: return "intransitive";
        case Family::Affine: return "affine";
    }
    return "?";
}

/// One instance of a named triple family, with its structural facts verified
/// at build time and the family's expected decision properties listed by tag.
struct TripleSpec {
    Family family;
    std::vector<long> parameters;
    PairInstance instance;
    std::vector<std::string> expected;
    std::optional<FieldSpec> field;

    std::string spec_string() const {
        std::string out = family_name(family);
        out += ':';
        for (std::size_t i = 0; i < parameters.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parameters[i]);
        }
        return out;
    }
};

namespace detail {

inline void check_order(const PermGroup& g, std::size_t expected, const char* what) {
    require(g.order() == expected, ErrorCode::ConsistencyViolation,
            std::string(what) + ": order " + std::to_string(g.order()) + ", expected " +
                std::to_string(expected));
}

/// Sym([m]) embedded in Sym(n) as the pointwise stabilizer of {m, ..., n-1}.
inline PermGroup embedded_symmetric(std::size_t n, std::size_t m) {
    std::vector<Permutation> gens;
    if (m >= 2) gens.push_back(Permutation::transposition(n, 0, 1));
    if (m >= 3) {
        std::vector<Point> cycle(m);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        gens.push_back(Permutation::from_cycle(n, cycle));
    }
    return PermGroup::closure(n, std::move(gens));
}

inline std::uint32_t least_primitive_root(std::uint32_t p) {
    for (std::uint32_t g = 2; g < p; ++g) {
        std::uint32_t acc = g % p;
        std::uint32_t order = 1;
        while (acc != 1) {
            acc = static_cast<std::uint32_t>((static_cast<std::uint64_t>(acc) * g) % p);
            ++order;
        }
        if (order == p - 1) return g;
    }
    raise(ErrorCode::ConsistencyViolation, "no primitive root found");
}

} // namespace detail

/// Dihedral triple: G of order 8n acting on the 4n-gon (a = unit rotation,
/// b = the reflection fixing vertex 0), A = <a^(2n), b> of order 4,
/// H = <b> of order 2. Every left coset of A contains an involution, yet A is
/// not a perfect code of the pair.
inline TripleSpec build_dihedral(long n) {
    require(n >= 1, ErrorCode::ParameterOutOfRange, "dihedral family requires n >= 1");
    const std::size_t points = 4 * static_cast<std::size_t>(n);
    std::vector<Point> rot(points);
    std::iota(rot.begin(), rot.end(), Point{0});
    Permutation a = Permutation::from_cycle(points, rot);
    std::vector<Point> refl(points);
    for (std::size_t i = 0; i < points; ++i) refl[i] = static_cast<Point>((points - i) % points);
    Permutation b{std::move(refl)};

    PermGroup G = PermGroup::closure(points, {a, b});
    Permutation a2n = perm_power(a, 2 * static_cast<std::uint64_t>(n));
    PermGroup A = PermGroup::closure(points, {a2n, b});
    PermGroup H = PermGroup::closure(points, {b});

    detail::check_order(G, 8 * static_cast<std::size_t>(n), "dihedral G");
    detail::check_order(A, 4, "dihedral A");
    detail::check_order(H, 2, "dihedral H");
    for (const auto& e : A.elements()) // A is elementary abelian of rank 2
        require(e.is_identity() || e.is_involution(), ErrorCode::ConsistencyViolation,
                "dihedral A is not C2 x C2");

    TripleSpec spec{Family::Dihedral8n,
                    {n},
                    make_pair_instance(std::move(G), std::move(A), std::move(H)),
                    {"pair-necessary-condition-holds", "not-pair-perfect-code"},
                    std::nullopt};
    return spec;
}

/// Characteristic-2 field triple on q = 4^d points:
/// G = V x| (<s^(2^d - 1)> x| <phi^d>), A = V x| <phi^d>,
/// H = {e, R(w), R(w^(2^d)), R(w + w^(2^d))}. Every class ratio off A is
/// even, and the normalizer-closure obstruction applies.
inline TripleSpec build_field_c2(long d) {
    require(d >= 2, ErrorCode::ParameterOutOfRange, "field family requires d >= 2");
    FieldSpec field = FieldSpec::make(2, 2 * static_cast<std::uint32_t>(d));
    EmbeddedField emb = embed_permutations(field);
    const std::uint32_t q = field.q();
    const std::uint64_t half_order = (std::uint64_t{1} << d) - 1; // 2^d - 1

    Permutation s_power = perm_power(emb.singer, half_order);
    Permutation phi_power = perm_power(emb.frobenius_perm, static_cast<std::uint64_t>(d));

    std::vector<Permutation> g_gens = emb.V.generators();
    g_gens.push_back(s_power);
    g_gens.push_back(phi_power);
    PermGroup G = PermGroup::closure(q, std::move(g_gens));

    std::vector<Permutation> a_gens = emb.V.generators();
    a_gens.push_back(phi_power);
    PermGroup A = PermGroup::closure(q, std::move(a_gens));

    FieldElement w = field.omega();
    FieldElement w2d = field.pow(w, std::uint64_t{1} << d);
    PermGroup H = PermGroup::closure(q, {emb.translation(w), emb.translation(w2d)});

    detail::check_order(G, static_cast<std::size_t>(q) * ((half_order + 2)) * 2, "fieldc2 G");
    detail::check_order(A, 2 * static_cast<std::size_t>(q), "fieldc2 A");
    detail::check_order(H, 4, "fieldc2 H");
    require(s_power.conjugated_by(phi_power) == s_power.inverse(), ErrorCode::ConsistencyViolation,
            "phi^d does not invert s^(2^d - 1)");
    require(emb.translation(w).conjugated_by(phi_power) == emb.translation(w2d),
            ErrorCode::ConsistencyViolation, "R(w)^phi^d != R(w^(2^d))");
    for (const auto& gen : A.generators()) // A normalizes H
        for (const auto& h : H.elements())
            require(H.contains(h.conjugated_by(gen)), ErrorCode::ConsistencyViolation,
                    "A does not normalize H");

    TripleSpec spec{Family::FieldC2,
                    {d},
                    make_pair_instance(std::move(G), std::move(A), std::move(H)),
                    {"even-class-ratio-off-A", "obstruction-fires", "not-pair-perfect-code"},
                    field};
    return spec;
}

/// Odd-characteristic affine semilinear triple on q = p^f points (p, f odd):
/// G = V x| (<s> x| <phi>) of order q(q-1)f, A = V x| <phi> of odd order qf,
/// H = <R(1)>. For f > 1 the normalizer-closure obstruction applies; for
/// f = 1 the triple degenerates to A = H and is a perfect code of the pair.
inline TripleSpec build_field_agammal(long p, long f) {
    require(p >= 3 && p % 2 == 1, ErrorCode::ParameterOutOfRange, "p must be an odd prime");
    require(f >= 1 && f % 2 == 1, ErrorCode::ParameterOutOfRange, "f must be odd");
    FieldSpec field = FieldSpec::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(f));
    EmbeddedField emb = embed_permutations(field);
    const std::uint32_t q = field.q();

    std::vector<Permutation> g_gens = emb.V.generators();
    g_gens.push_back(emb.singer);
    g_gens.push_back(emb.frobenius_perm);
    PermGroup G = PermGroup::closure(q, std::move(g_gens));

    std::vector<Permutation> a_gens = emb.V.generators();
    a_gens.push_back(emb.frobenius_perm);
    PermGroup A = PermGroup::closure(q, std::move(a_gens));

    PermGroup H = PermGroup::closure(q, {emb.translation(field.one())});

    detail::check_order(G, static_cast<std::size_t>(q) * (q - 1) * f, "agammal G");
    detail::check_order(A, static_cast<std::size_t>(q) * f, "agammal A");
    detail::check_order(H, static_cast<std::size_t>(p), "agammal H");
    require(A.order() % 2 == 1, ErrorCode::ConsistencyViolation, "A must have odd order");

    std::vector<std::string> expected = {"parity-or-square-dichotomy"};
    if (f > 1) {
        expected.push_back("obstruction-fires");
        expected.push_back("not-pair-perfect-code");
    } else {
        expected.push_back("pair-perfect-code"); // A = H
    }
    expected.push_back("A-is-group-perfect-code");

    TripleSpec spec{Family::FieldAGammaL,
                    {p, f},
                    make_pair_instance(std::move(G), std::move(A), std::move(H)),
                    std::move(expected),
                    field};
    return spec;
}

/// Nested symmetric groups S_l < S_m < S_n (pointwise stabilizers of the tail
/// points). Carries an explicit transversal construction; see
/// chain_transversal below.
inline TripleSpec build_sym_chain(long l, long m, long n, long degree_cap = 9) {
    require(1 <= l && l < m && m < n, ErrorCode::ParameterOutOfRange,
            "chain requires 1 <= l < m < n");
    require(n <= degree_cap, ErrorCode::ParameterOutOfRange,
            "chain degree exceeds cap " + std::to_string(degree_cap));
    const std::size_t nn = static_cast<std::size_t>(n);
    PermGroup G = PermGroup::symmetric(nn);
    PermGroup A = detail::embedded_symmetric(nn, static_cast<std::size_t>(m));
    PermGroup H = detail::embedded_symmetric(nn, static_cast<std::size_t>(l));

    TripleSpec spec{Family::SymChain,
                    {l, m, n},
                    make_pair_instance(std::move(G), std::move(A), std::move(H)),
                    {"explicit-transversal-certified", "pair-perfect-code"},
                    std::nullopt};
    return spec;
}

/// Intransitive pair: A = Sym([m]) x Sym([n]\[m]) inside Sym(n), H trivial.
inline TripleSpec build_intransitive(long m, long n) {
    require(1 <= m && m < n, ErrorCode::ParameterOutOfRange, "requires 1 <= m < n");
    require(n <= 9, ErrorCode::ParameterOutOfRange, "degree cap is 9");
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t mm = static_cast<std::size_t>(m);
    PermGroup G = PermGroup::symmetric(nn);
    std::vector<Permutation> gens;
    if (mm >= 2) gens.push_back(Permutation::transposition(nn, 0, 1));
    if (mm >= 3) {
        std::vector<Point> cycle(mm);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        gens.push_back(Permutation::from_cycle(nn, cycle));
    }
    if (nn - mm >= 2)
        gens.push_back(Permutation::transposition(nn, static_cast<Point>(mm), static_cast<Point>(mm + 1)));
    if (nn - mm >= 3) {
        std::vector<Point> cycle(nn - mm);
        std::iota(cycle.begin(), cycle.end(), static_cast<Point>(mm));
        gens.push_back(Permutation::from_cycle(nn, cycle));
    }
    PermGroup A = PermGroup::closure(nn, std::move(gens));

    std::size_t expected_order = 1;
    for (std::size_t i = 2; i <= mm; ++i) expected_order *= i;
    for (std::size_t i = 2; i <= nn - mm; ++i) expected_order *= i;
    detail::check_order(A, expected_order, "intransitive A");

    TripleSpec spec{Family::IntransitiveMax,
                    {m, n},
                    make_pair_instance(std::move(G), std::move(A), PermGroup::trivial(nn)),
                    {"involution-witnesses", "group-perfect-code"},
                    std::nullopt};
    return spec;
}

/// Affine pair: A = AGL(1,p) inside Sym(p), H trivial.
inline TripleSpec build_affine(long p) {
    require(p >= 3 && p <= 13, ErrorCode::ParameterOutOfRange, "requires an odd prime 3 <= p <= 13");
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
    require(prime && p % 2 == 1, ErrorCode::ParameterOutOfRange, "p must be an odd prime");

    const std::size_t pp = static_cast<std::size_t>(p);
    PermGroup G = PermGroup::symmetric(pp);
    std::vector<Point> shift(pp);
    std::iota(shift.begin(), shift.end(), Point{0});
    Permutation translation = Permutation::from_cycle(pp, shift);
    std::uint32_t root = detail::least_primitive_root(static_cast<std::uint32_t>(p));
    std::vector<Point> scale(pp);
    for (std::size_t i = 0; i < pp; ++i)
        scale[i] = static_cast<Point>((i * root) % pp);
    PermGroup A = PermGroup::closure(pp, {translation, Permutation(std::move(scale))});
    detail::check_order(A, pp * (pp - 1), "AGL(1,p)");

    TripleSpec spec{Family::Affine,
                    {p},
                    make_pair_instance(std::move(G), std::move(A), PermGroup::trivial(pp)),
                    {"group-perfect-code", "sylow-reduction-agrees"},
                    std::nullopt};
    return spec;
}

// --- explicit transversal for the nested symmetric chain --------------------

/// An injection from {m, ..., n-1} into {0, ..., n-1}, stored as the image
/// tuple of the points m, m+1, ..., n-1.
using TailInjection = std::vector<Point>;

/// All injections in lexicographic order of their image tuples.
inline std::vector<TailInjection> tail_injections(std::size_t m, std::size_t n) {
    std::vector<TailInjection> all;
    TailInjection current;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n - m) {
            all.push_back(current);
            return;
        }
        for (Point v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            current.push_back(v);
            self(self, depth + 1);
            current.pop_back();
            used[v] = false;
        }
    };
    rec(rec, 0);
    return all;
}

/// The permutation attached to one injection: tail points follow the
/// injection; each head point k < m walks its preimage chain under the
/// injection until leaving the image, and maps to the chain's end.
inline Permutation chain_representative(std::size_t m, std::size_t n, const TailInjection& sigma) {
    require(sigma.size() == n - m, ErrorCode::InvalidInput, "injection arity mismatch");
    std::vector<std::int32_t> preimage(n, -1);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        require(sigma[i] < n, ErrorCode::InvalidInput, "injection image out of range");
        require(preimage[sigma[i]] < 0, ErrorCode::InvalidInput, "injection not injective");
        preimage[sigma[i]] = static_cast<std::int32_t>(m + i);
    }
    std::vector<Point> img(n);
    for (std::size_t i = m; i < n; ++i) img[i] = sigma[i - m];
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t t = k;
        std::size_t steps = 0;
        while (preimage[t] >= 0) {
            t = static_cast<std::size_t>(preimage[t]);
            require(++steps <= n, ErrorCode::ConsistencyViolation, "preimage chain did not terminate");
        }
        img[k] = static_cast<Point>(t);
    }
    return Permutation(std::move(img));
}

struct ChainTransversal {
    std::vector<TailInjection> injections;
    std::vector<Permutation> X; // X[i] belongs to injections[i]
};

/// The full explicit transversal of S_m in S_n: one representative per
/// injection. Verifies |X| = n!/m!, transversal-ness, and X S_l = S_l X^-1,
/// then returns it.
inline ChainTransversal chain_transversal(const TripleSpec& chain) {
    require(chain.family == Family::SymChain, ErrorCode::InvalidInput, "not a chain triple");
    const std::size_t m = static_cast<std::size_t>(chain.parameters[1]);
    const std::size_t n = static_cast<std::size_t>(chain.parameters[2]);

    ChainTransversal out;
    out.injections = tail_injections(m, n);
    out.X.reserve(out.injections.size());
    for (const auto& sigma : out.injections) out.X.push_back(chain_representative(m, n, sigma));

    std::size_t expected = 1;
    for (std::size_t i = m + 1; i <= n; ++i) expected *= i;
    require(out.X.size() == expected, ErrorCode::ConsistencyViolation,
            "transversal size is not n!/m!");
    require(pair_witness_valid(chain.instance, out.X), ErrorCode::ConsistencyViolation,
            "explicit chain transversal failed certification");
    return out;
}

/// Partner representative: from the cycle form of x(sigma), reverse the tail
/// cycles and re-anchor each head cycle at k^h. The result lies in X and
/// x(sigma) * h * y lies in S_l.
inline Permutation chain_partner(std::size_t l, std::size_t m, std::size_t n,
                                 const TailInjection& sigma, const Permutation& h) {
    require(h.degree() == n, ErrorCode::InvalidInput, "partner requires degree-n h");
    for (std::size_t i = l; i < n; ++i)
        require(h.apply(static_cast<Point>(i)) == i, ErrorCode::InvalidInput,
                "h must fix every point >= l");
    Permutation x = chain_representative(m, n, sigma);

    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& cycle : x.cycles()) {
        // at most one point of the head [0, m) per cycle
        std::size_t head_pos = cycle.size();
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (cycle[i] < m) {
                require(head_pos == cycle.size(), ErrorCode::ConsistencyViolation,
                        "cycle holds two head points");
                head_pos = i;
            }
        if (head_pos == cycle.size()) {
            for (std::size_t i = 0; i < cycle.size(); ++i) // inverse cycle
                img[cycle[(i + 1) % cycle.size()]] = cycle[i];
        } else {
            // x-cycle from k: (k, c1, ..., cj); partner cycle (k^h, cj, ..., c1)
            std::vector<Point> rotated;
            for (std::size_t i = 0; i < cycle.size(); ++i)
                rotated.push_back(cycle[(head_pos + i) % cycle.size()]);
            Point k = rotated[0];
            Point kh = h.apply(k);
            img[kh] = rotated.back();
            for (std::size_t i = rotated.size(); i-- > 2;) img[rotated[i]] = rotated[i - 1];
            img[rotated[1]] = kh;
        }
    }
    Permutation y{std::move(img)};

    Permutation product = x * h * y;
    for (std::size_t i = l; i < n; ++i)
        require(product.apply(static_cast<Point>(i)) == i, ErrorCode::ConsistencyViolation,
                "x * h * y does not fix the tail");
    return y;
}

/// The pairing involution for an intransitive block pair: the product of the
/// transpositions (k, k^x) over head points k sent outside the head. Requires
/// x^2 to preserve the head; the result y satisfies y^2 = e and y x^-1
/// preserves the head (so y lies in Ax).
inline Permutation block_involution(const Permutation& x, std::size_t m) {
    const std::size_t n = x.degree();
    Permutation xx = x * x;
    for (std::size_t k = 0; k < m; ++k)
        require(xx.apply(static_cast<Point>(k)) < m, ErrorCode::PreconditionViolated,
                "x^2 must preserve the head block");
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t k = 0; k < m; ++k) {
        Point image = x.apply(static_cast<Point>(k));
        if (image >= m) {
            img[k] = image;
            img[image] = static_cast<Point>(k);
        }
    }
    Permutation y{std::move(img)};
    require((y * y).is_identity(), ErrorCode::ConsistencyViolation, "pairing is not an involution");
    Permutation check = y * x.inverse();
    for (std::size_t k = 0; k < m; ++k)
        require(check.apply(static_cast<Point>(k)) < m, ErrorCode::ConsistencyViolation,
                "y x^-1 does not preserve the head block");
    return y;
}

/// Involution in xQ for a semiregular 2-group Q of full 2-part order and
/// x in N_G(Q) \ Q with x^2 in Q: some <Q,x>-orbit has length |Q|, and its
/// point stabilizer provides the involution. Preconditions are checked and
/// named individually.
inline Permutation normalizer_involution(const PermGroup& G, const PermGroup& Q,
                                         const Permutation& x) {
    require_subgroup(G, Q, "requires Q <= G");
    require(G.contains(x), ErrorCode::ElementNotInGroup, "x must lie in G");
    std::size_t qorder = Q.order();
    require(qorder >= 2 && (qorder & (qorder - 1)) == 0, ErrorCode::PreconditionViolated,
            "Q must be a nontrivial 2-group");
    std::size_t degree_odd_part = G.degree();
    std::size_t two_part = 1;
    while (degree_odd_part % 2 == 0) {
        degree_odd_part /= 2;
        two_part *= 2;
    }
    require(two_part == qorder, ErrorCode::PreconditionViolated,
            "degree must be |Q| times an odd number");
    std::vector<Point> all(G.degree());
    std::iota(all.begin(), all.end(), Point{0});
    require(is_semiregular(Q, all), ErrorCode::PreconditionViolated, "Q must be semiregular");
    require(!Q.contains(x), ErrorCode::PreconditionViolated, "x must lie outside Q");
    for (const auto& q : Q.elements())
        require(Q.contains(q.conjugated_by(x)), ErrorCode::PreconditionViolated,
                "x must normalize Q");
    require(Q.contains(x * x), ErrorCode::PreconditionViolated, "x^2 must lie in Q");

    std::vector<Permutation> coset; // xQ in canonical order
    coset.reserve(qorder);
    for (const auto& q : Q.elements()) coset.push_back(x * q);
    std::sort(coset.begin(), coset.end());

    std::vector<bool> seen(G.degree(), false);
    for (Point alpha = 0; alpha < G.degree(); ++alpha) {
        if (seen[alpha]) continue;
        std::vector<Point> orbit;
        std::vector<bool> in_orbit(G.degree(), false);
        auto visit = [&](Point p) {
            if (!in_orbit[p]) {
                in_orbit[p] = true;
                orbit.push_back(p);
            }
        };
        visit(alpha);
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& q : Q.elements()) visit(q.apply(orbit[i]));
            for (const auto& c : coset) visit(c.apply(orbit[i]));
        }
        for (Point p : orbit) seen[p] = true;
        if (orbit.size() != qorder) continue;
        for (const auto& c : coset) {
            if (c.apply(alpha) == alpha) {
                require(c.is_involution(), ErrorCode::ConsistencyViolation,
                        "point stabilizer element is not an involution");
                return c;
            }
        }
    }
    raise(ErrorCode::ConsistencyViolation, "no orbit of length |Q| found");
}

// --- maximal subgroup catalog -----------------------------------------------

struct CatalogEntry {
    std::string name;
    PermGroup group;
};

namespace detail {

inline PermGroup wreath_blocks(std::size_t a, std::size_t b) {
    const std::size_t n = a * b;
    std::vector<Permutation> gens;
    if (a >= 2) gens.push_back(Permutation::transposition(n, 0, 1));
    if (a >= 3) {
        std::vector<Point> cycle(a);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        gens.push_back(Permutation::from_cycle(n, cycle));
    }
    auto block_perm = [&](auto&& tau) {
        std::vector<Point> img(n);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t r = 0; r < a; ++r) img[i * a + r] = static_cast<Point>(tau(i) * a + r);
        return Permutation(std::move(img));
    };
    if (b >= 2) gens.push_back(block_perm([](std::size_t i) { return i == 0 ? 1 : i == 1 ? 0 : i; }));
    if (b >= 3) gens.push_back(block_perm([b](std::size_t i) { return (i + 1) % b; }));
    PermGroup W = PermGroup::closure(n, std::move(gens));
    std::size_t expected = 1;
    for (std::size_t i = 2; i <= a; ++i) expected *= i;
    std::size_t block_fact = expected;
    std::size_t total = 1;
    for (std::size_t i = 0; i < b; ++i) total *= block_fact;
    for (std::size_t i = 2; i <= b; ++i) total *= i;
    check_order(W, total, "wreath product");
    return W;
}

inline PermGroup pgl_2_5() {
    // projective line over GF(5): points 0..4 are the field, 5 is infinity
    const std::size_t n = 6;
    Permutation t = Permutation::from_cycle(n, {0, 1, 2, 3, 4});      // z -> z + 1
    Permutation s = Permutation::from_cycle(n, {1, 2, 4, 3});         // z -> 2z
    Permutation inv = Permutation::parse("(1 6)(3 4)", n);            // z -> 1/z
    PermGroup P = PermGroup::closure(n, {t, s, inv});
    check_order(P, 120, "PGL(2,5)");
    return P;
}

inline PermGroup agl_1_p(std::size_t p) {
    std::vector<Point> shift(p);
    std::iota(shift.begin(), shift.end(), Point{0});
    std::uint32_t root = least_primitive_root(static_cast<std::uint32_t>(p));
    std::vector<Point> scale(p);
    for (std::size_t i = 0; i < p; ++i) scale[i] = static_cast<Point>((i * root) % p);
    PermGroup A = PermGroup::closure(p, {Permutation::from_cycle(p, shift), Permutation(std::move(scale))});
    check_order(A, p * (p - 1), "AGL(1,p)");
    return A;
}

inline PermGroup product_of_symmetrics(std::size_t n, std::size_t m) {
    std::vector<Permutation> gens;
    if (m >= 2) gens.push_back(Permutation::transposition(n, 0, 1));
    if (m >= 3) {
        std::vector<Point> cycle(m);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        gens.push_back(Permutation::from_cycle(n, cycle));
    }
    if (n - m >= 2)
        gens.push_back(Permutation::transposition(n, static_cast<Point>(m), static_cast<Point>(m + 1)));
    if (n - m >= 3) {
        std::vector<Point> cycle(n - m);
        std::iota(cycle.begin(), cycle.end(), static_cast<Point>(m));
        gens.push_back(Permutation::from_cycle(n, cycle));
    }
    return PermGroup::closure(n, std::move(gens));
}

} // namespace detail

/// Conjugacy-class representatives of the maximal subgroups of Sym(n) for
/// n <= 7, with explicit generators. Maximality itself is classical catalog
/// data (the standard classification of maximal subgroups of symmetric
/// groups); what is machine-verified here is that each entry is a proper
/// subgroup of the expected order and that no entry contains another.
inline std::vector<CatalogEntry> maximal_catalog(std::size_t n) {
    require(n >= 2 && n <= 7, ErrorCode::ParameterOutOfRange, "catalog covers 2 <= n <= 7");
    std::vector<CatalogEntry> catalog;
    catalog.push_back({"Alt(" + std::to_string(n) + ")", PermGroup::alternating(n)});
    for (std::size_t m = 1; 2 * m < n; ++m) {
        std::string name = "Sym(" + std::to_string(n - m) + ")xSym(" + std::to_string(m) + ")";
        catalog.push_back({name, detail::product_of_symmetrics(n, n - m)});
    }
    if (n == 4) catalog.push_back({"Sym(2)wrSym(2)", detail::wreath_blocks(2, 2)});
    if (n == 5) catalog.push_back({"AGL(1,5)", detail::agl_1_p(5)});
    if (n == 6) {
        catalog.push_back({"Sym(3)wrSym(2)", detail::wreath_blocks(3, 2)});
        catalog.push_back({"Sym(2)wrSym(3)", detail::wreath_blocks(2, 3)});
        catalog.push_back({"PGL(2,5)", detail::pgl_2_5()});
    }
    if (n == 7) catalog.push_back({"AGL(1,7)", detail::agl_1_p(7)});

    PermGroup full = PermGroup::symmetric(n);
    std::size_t full_order = full.order();
    for (const auto& entry : catalog) {
        require(entry.group.order() < full_order && entry.group.is_subgroup_of(full),
                ErrorCode::ConsistencyViolation, entry.name + " is not a proper subgroup");
        for (const auto& other : catalog) {
            if (&entry == &other) continue;
            require(!entry.group.is_subgroup_of(other.group), ErrorCode::ConsistencyViolation,
                    entry.name + " is contained in " + other.name);
        }
    }
    return catalog;
}

} // namespace pcode

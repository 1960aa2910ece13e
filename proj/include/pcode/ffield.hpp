#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcode/perm_group.hpp"

namespace pcode {

/// Element of GF(p^f) in the polynomial basis: coeffs[i] is the coefficient
/// of x^i, each in [0, p).
struct FieldElement {
    std::vector<std::uint16_t> coeffs;

    friend bool operator==(const FieldElement& a, const FieldElement& b) = default;

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(coeffs[i]);
        }
        return out + "]";
    }
};

/// GF(p^f) with a deterministic modulus and a designated multiplicative
/// generator omega. The modulus is the lexicographically smallest monic
/// irreducible of degree f whose residue of x is primitive; if no modulus
/// has x primitive, the smallest irreducible is used and omega is the
/// lexicographically smallest primitive element.
///
/// Elements are canonically ordered coefficient-lexicographically with 0
/// first; element_index/element_at convert both ways. That order also fixes
/// the point labels whenever the field is embedded into a symmetric group.
class FieldSpec {
public:
    static constexpr std::size_t kDefaultFieldCap = 4096;

    static FieldSpec make(std::uint32_t p, std::uint32_t f, std::size_t cap = kDefaultFieldCap) {
        require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        require(f >= 1, ErrorCode::ParameterOutOfRange, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < f; ++i) {
            q *= p;
            require(q <= cap, ErrorCode::FieldTooLarge,
                    "field size exceeds cap " + std::to_string(cap));
        }
        return FieldSpec(p, f, static_cast<std::uint32_t>(q));
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t f() const { return f_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients, low-to-high, length f+1, monic.
    const std::vector<std::uint16_t>& modulus() const { return modulus_; }
    const FieldElement& omega() const { return omega_powers_[1 % omega_powers_.size()]; }
    /// omega^k for k in [0, q-1).
    const FieldElement& omega_pow(std::uint32_t k) const { return omega_powers_[k % (q_ - 1)]; }

    FieldElement zero() const { return {std::vector<std::uint16_t>(f_, 0)}; }
    FieldElement one() const {
        FieldElement e = zero();
        e.coeffs[0] = 1;
        return e;
    }
    bool is_zero(const FieldElement& u) const {
        for (auto c : u.coeffs)
            if (c) return false;
        return true;
    }

    /// Canonical index: coefficient vectors compared lexicographically from
    /// coeffs[0], so index = sum coeffs[i] * p^(f-1-i). Zero gets index 0.
    std::uint32_t element_index(const FieldElement& u) const {
        std::uint32_t idx = 0;
        for (std::uint32_t i = 0; i < f_; ++i) idx = idx * p_ + u.coeffs[i];
        return idx;
    }

    FieldElement element_at(std::uint32_t index) const {
        FieldElement u = zero();
        for (std::uint32_t i = f_; i-- > 0;) {
            u.coeffs[i] = static_cast<std::uint16_t>(index % p_);
            index /= p_;
        }
        return u;
    }

    FieldElement add(const FieldElement& u, const FieldElement& v) const {
        FieldElement w = zero();
        for (std::uint32_t i = 0; i < f_; ++i)
            w.coeffs[i] = static_cast<std::uint16_t>((u.coeffs[i] + v.coeffs[i]) % p_);
        return w;
    }

    FieldElement neg(const FieldElement& u) const {
        FieldElement w = zero();
        for (std::uint32_t i = 0; i < f_; ++i)
            w.coeffs[i] = static_cast<std::uint16_t>((p_ - u.coeffs[i]) % p_);
        return w;
    }

    FieldElement sub(const FieldElement& u, const FieldElement& v) const { return add(u, neg(v)); }

    FieldElement mul(const FieldElement& u, const FieldElement& v) const {
        std::vector<std::uint32_t> prod(2 * f_ - 1, 0);
        for (std::uint32_t i = 0; i < f_; ++i) {
            if (!u.coeffs[i]) continue;
            for (std::uint32_t j = 0; j < f_; ++j)
                prod[i + j] = (prod[i + j] + static_cast<std::uint32_t>(u.coeffs[i]) * v.coeffs[j]) % p_;
        }
        // reduce by the monic modulus
        for (std::uint32_t d = 2 * f_ - 2; d + 1 > f_; --d) {
            std::uint32_t lead = prod[d];
            if (!lead) continue;
            prod[d] = 0;
            for (std::uint32_t i = 0; i < f_; ++i) {
                std::uint32_t pos = d - f_ + i;
                prod[pos] = (prod[pos] + lead * (p_ - modulus_[i])) % p_;
            }
        }
        FieldElement w = zero();
        for (std::uint32_t i = 0; i < f_; ++i) w.coeffs[i] = static_cast<std::uint16_t>(prod[i]);
        return w;
    }

    FieldElement pow(FieldElement base, std::uint64_t e) const {
        FieldElement acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    FieldElement inv(const FieldElement& u) const {
        require(!is_zero(u), ErrorCode::DivisionByZero, "inverse of zero");
        std::uint32_t k = log_table_[element_index(u)];
        return omega_powers_[(q_ - 1 - k) % (q_ - 1)];
    }

    /// Frobenius map u -> u^p, a field automorphism of order f.
    FieldElement frobenius(const FieldElement& u) const { return pow(u, p_); }

    /// Discrete log base omega (table lookup); u must be nonzero.
    std::uint32_t log(const FieldElement& u) const {
        require(!is_zero(u), ErrorCode::DivisionByZero, "log of zero");
        return log_table_[element_index(u)];
    }

private:
    FieldSpec(std::uint32_t p, std::uint32_t f, std::uint32_t q) : p_(p), f_(f), q_(q) {
        choose_modulus_and_generator();
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    using Poly = std::vector<std::uint16_t>; // low-to-high, no trailing zeros

    static Poly trim(Poly a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) const {
        std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + static_cast<std::uint32_t>(a[i]) * b[j]) % p_;
        }
        std::size_t deg_mod = mod.size() - 1;
        for (std::size_t d = prod.size(); d-- > deg_mod;) {
            std::uint32_t lead = prod[d];
            if (!lead) continue;
            prod[d] = 0;
            for (std::size_t i = 0; i < deg_mod; ++i)
                prod[d - deg_mod + i] =
                    (prod[d - deg_mod + i] + lead * (p_ - mod[i])) % p_;
        }
        Poly out(deg_mod, 0);
        for (std::size_t i = 0; i < deg_mod && i < prod.size(); ++i)
            out[i] = static_cast<std::uint16_t>(prod[i]);
        return trim(std::move(out));
    }

    Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod) const {
        Poly acc = {1};
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, base, mod);
            base = poly_mulmod(base, base, mod);
            e >>= 1;
        }
        return acc;
    }

    std::uint32_t mod_inverse(std::uint32_t a) const { // a != 0 mod p
        std::uint32_t r = 1;
        std::uint32_t e = p_ - 2;
        std::uint64_t b = a % p_;
        while (e) {
            if (e & 1) r = static_cast<std::uint32_t>((r * b) % p_);
            b = (b * b) % p_;
            e >>= 1;
        }
        return r;
    }

    Poly poly_gcd(Poly a, Poly b) const {
        a = trim(std::move(a));
        b = trim(std::move(b));
        while (!b.empty()) {
            // a mod b
            while (a.size() >= b.size() && !a.empty()) {
                std::uint32_t factor =
                    static_cast<std::uint32_t>(a.back()) * mod_inverse(b.back()) % p_;
                std::size_t shift = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[shift + i] = static_cast<std::uint16_t>(
                        (a[shift + i] + (p_ - factor) * b[i]) % p_);
                a = trim(std::move(a));
            }
            std::swap(a, b);
        }
        return a;
    }

    bool is_irreducible(const Poly& g) const {
        // No factor of any proper degree: gcd(g, x^(p^k) - x) = 1 for k < f,
        // and x^(p^f) = x mod g.
        if (f_ == 1) return true;
        Poly x = {0, 1};
        Poly power = x;
        for (std::uint32_t k = 1; k < f_; ++k) {
            power = poly_powmod(power, p_, g);
            Poly diff = power;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = static_cast<std::uint16_t>((diff[1] + p_ - 1) % p_);
            if (poly_gcd(trim(std::move(diff)), g).size() != 1) return false;
        }
        power = poly_powmod(power, p_, g);
        return trim(power) == x;
    }

    bool has_full_order(const FieldElement& candidate) {
        if (is_zero(candidate)) return false;
        FieldElement acc = candidate;
        std::uint32_t count = 1;
        FieldElement unit = one();
        while (!(acc == unit)) {
            acc = mul(acc, candidate);
            ++count;
            if (count > q_) return false;
        }
        return count == q_ - 1;
    }

    void build_tables(const FieldElement& omega) {
        omega_powers_.clear();
        omega_powers_.push_back(one());
        FieldElement acc = one();
        for (std::uint32_t k = 1; k + 1 < q_; ++k) {
            acc = mul(acc, omega);
            omega_powers_.push_back(acc);
        }
        log_table_.assign(q_, 0);
        for (std::uint32_t k = 0; k < omega_powers_.size(); ++k)
            log_table_[element_index(omega_powers_[k])] = k;
    }

    void choose_modulus_and_generator() {
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < f_; ++i) total *= p_;
        Poly first_irreducible;
        for (std::uint64_t code = 0; code < total; ++code) {
            Poly candidate(f_ + 1, 0);
            candidate[f_] = 1;
            // coeffs[0] is most significant so codes enumerate in lex order
            std::uint64_t tmp = code;
            for (std::uint32_t i = f_; i-- > 0;) {
                candidate[i] = static_cast<std::uint16_t>(tmp % p_);
                tmp /= p_;
            }
            if (!is_irreducible(candidate)) continue;
            if (first_irreducible.empty()) first_irreducible = candidate;
            modulus_ = candidate;
            FieldElement x_residue = zero();
            if (f_ == 1)
                x_residue.coeffs[0] = static_cast<std::uint16_t>((p_ - candidate[0]) % p_);
            else
                x_residue.coeffs[1] = 1;
            if (has_full_order(x_residue)) {
                build_tables(x_residue);
                return;
            }
        }
        require(!first_irreducible.empty(), ErrorCode::ConsistencyViolation,
                "no irreducible modulus found");
        modulus_ = first_irreducible;
        for (std::uint32_t idx = 1; idx < q_; ++idx) {
            FieldElement candidate = element_at(idx);
            if (has_full_order(candidate)) {
                build_tables(candidate);
                return;
            }
        }
        raise(ErrorCode::ConsistencyViolation, "no primitive element found");
    }

    std::uint32_t p_ = 0;
    std::uint32_t f_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint16_t> modulus_;
    std::vector<FieldElement> omega_powers_;
    std::vector<std::uint32_t> log_table_;
};

/// The field embedded into Sym(F_q): points are field elements in canonical
/// order. translations[i] is the permutation v -> v + element_at(i); V is the
/// full translation group, regular and elementary abelian of order q; singer
/// is v -> v*omega (fixes 0); frobenius_perm is v -> v^p (fixes 0 and 1).
struct EmbeddedField {
    FieldSpec field;
    PermGroup V;
    Permutation singer;
    Permutation frobenius_perm;
    std::vector<Permutation> translations;

    const Permutation& translation(const FieldElement& u) const {
        return translations[field.element_index(u)];
    }
};

inline EmbeddedField embed_permutations(const FieldSpec& field) {
    const std::uint32_t q = field.q();
    std::vector<FieldElement> elems(q);
    for (std::uint32_t i = 0; i < q; ++i) elems[i] = field.element_at(i);

    auto perm_from_map = [&](auto&& map) {
        std::vector<Point> img(q);
        for (std::uint32_t i = 0; i < q; ++i)
            img[i] = static_cast<Point>(field.element_index(map(elems[i])));
        return Permutation(std::move(img));
    };

    EmbeddedField out{field, {}, Permutation::identity(q), Permutation::identity(q), {}};
    out.translations.reserve(q);
    for (std::uint32_t i = 0; i < q; ++i) {
        const FieldElement& u = elems[i];
        out.translations.push_back(perm_from_map([&](const FieldElement& v) { return field.add(v, u); }));
    }
    out.singer = perm_from_map([&](const FieldElement& v) { return field.mul(v, field.omega()); });
    out.frobenius_perm = perm_from_map([&](const FieldElement& v) { return field.frobenius(v); });

    std::vector<Permutation> basis_translations;
    for (std::uint32_t i = 0; i < field.f(); ++i) {
        FieldElement monomial = field.zero();
        monomial.coeffs[i] = 1;
        basis_translations.push_back(out.translation(monomial));
    }
    out.V = PermGroup::from_elements(q, out.translations, std::move(basis_translations));
    return out;
}

} // namespace pcode

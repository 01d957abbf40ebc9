#pragma once

// Finite fields GF(p^e) for the small orders used by the geometric
// constructions. Elements are stored as their coefficient vector packed in
// base p (coefficient of x^i is digit i), so equality is coefficient-wise and
// every element has exactly one representation.

#include "evencycle/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evencycle {

struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

enum class ArithOp { Add, Sub, Mul, Inv, Neg, Pow };

namespace detail {

constexpr bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Remainder of a modulo b over GF(p); both constant term first, b monic.
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        a.pop_back();
    }
    return a;
}

inline bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    const std::size_t e = monic.size() - 1;
    for (std::size_t deg = 1; deg <= e / 2; ++deg) {
        // all monic polynomials of this degree
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> d(deg + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < deg; ++i) {
                d[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            d[deg] = 1;
            auto r = poly_mod(monic, d, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; }))
                return false;
        }
    }
    return true;
}

inline std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t e) {
    switch (p) {
    case 2:
        switch (e) {
        case 2: return std::vector<std::uint32_t>{1, 1, 1};          // x^2+x+1
        case 3: return std::vector<std::uint32_t>{1, 1, 0, 1};       // x^3+x+1
        case 4: return std::vector<std::uint32_t>{1, 1, 0, 0, 1};    // x^4+x+1
        case 5: return std::vector<std::uint32_t>{1, 0, 1, 0, 0, 1}; // x^5+x^2+1
        default: break;
        }
        break;
    case 3:
        switch (e) {
        case 2: return std::vector<std::uint32_t>{1, 0, 1};    // x^2+1
        case 3: return std::vector<std::uint32_t>{1, 2, 0, 1}; // x^3+2x+1
        default: break;
        }
        break;
    case 5:
        if (e == 2) return std::vector<std::uint32_t>{2, 4, 1}; // x^2+4x+2
        break;
    default: break;
    }
    return std::nullopt;
}

} // namespace detail

/// GF(p^e) with precomputed addition and multiplication tables.
///
/// Immutable after construction; copies share the tables.
class Field {
public:
    static constexpr std::uint32_t max_order = 1024;

    Field(std::uint32_t p, std::uint32_t e,
          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        if (!detail::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        if (e < 1) throw Error(ErrorCode::UnsupportedOrder, "extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > max_order)
                throw Error(ErrorCode::UnsupportedOrder, "field order exceeds " + std::to_string(max_order));
        }
        auto data = std::make_shared<Data>();
        data->p = p;
        data->e = e;
        data->q = static_cast<std::uint32_t>(q);

        if (!modulus) {
            if (e == 1) modulus = std::vector<std::uint32_t>{0, 1};
            else modulus = detail::default_modulus(p, e);
            if (!modulus)
                throw Error(ErrorCode::UnsupportedOrder,
                            "no built-in modulus for q = " + std::to_string(q) + "; supply one");
        }
        auto& mod = *modulus;
        if (mod.size() != e + 1) throw Error(ErrorCode::ReducibleModulus, "modulus must have degree e");
        for (auto& c : mod) c %= p;
        if (mod.back() == 0) throw Error(ErrorCode::ReducibleModulus, "modulus must have degree e");
        const std::uint32_t lead_inv = inverse_mod_prime(mod.back(), p);
        for (auto& c : mod) c = c * lead_inv % p;
        if (!detail::is_irreducible(mod, p))
            throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
        data->modulus = mod;
        build_tables(*data);
        data_ = std::move(data);
    }

    /// Field of order q using the built-in modulus table.
    static Field of_order(std::uint32_t q) {
        if (q < 2) throw Error(ErrorCode::UnsupportedOrder, "order must be at least 2");
        std::uint32_t p = 0;
        for (std::uint32_t d = 2; d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        std::uint32_t e = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) throw Error(ErrorCode::UnsupportedOrder, std::to_string(q) + " is not a prime power");
        return Field(p, e);
    }

    std::uint32_t characteristic() const noexcept { return data_->p; }
    std::uint32_t degree() const noexcept { return data_->e; }
    std::uint32_t order() const noexcept { return data_->q; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// The class of x modulo the defining polynomial.
    FieldElement adjoined_root() const {
        if (degree() == 1) return {(characteristic() - modulus()[0]) % characteristic()};
        return {characteristic()};
    }
    /// The i-th element in the canonical enumeration 0..q-1.
    FieldElement element(std::uint32_t index) const {
        if (index >= order()) throw Error(ErrorCode::Precondition, "element index out of range");
        return {index};
    }
    /// Image of an integer in the prime subfield.
    FieldElement from_int(std::int64_t v) const noexcept {
        const auto p = static_cast<std::int64_t>(characteristic());
        return {static_cast<std::uint32_t>(((v % p) + p) % p)};
    }
    FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const {
        if (coeffs.size() > degree()) throw Error(ErrorCode::UnsupportedOrder, "too many coefficients");
        std::uint32_t v = 0, scale = 1;
        for (auto c : coeffs) {
            v += (c % characteristic()) * scale;
            scale *= characteristic();
        }
        return {v};
    }
    std::vector<std::uint32_t> coefficients(FieldElement a) const {
        std::vector<std::uint32_t> out(degree());
        std::uint32_t v = a.value;
        for (auto& c : out) {
            c = v % characteristic();
            v /= characteristic();
        }
        return out;
    }

    FieldElement add(FieldElement a, FieldElement b) const noexcept { return {data_->add[idx(a, b)]}; }
    FieldElement mul(FieldElement a, FieldElement b) const noexcept { return {data_->mul[idx(a, b)]}; }
    FieldElement neg(FieldElement a) const noexcept { return {data_->neg[a.value]}; }
    FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
    FieldElement inv(FieldElement a) const {
        if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        return {data_->inv[a.value]};
    }
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t n) const noexcept {
        FieldElement r = one();
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    FieldElement arith(ArithOp op, FieldElement a, FieldElement b = {}, std::uint64_t exponent = 0) const {
        switch (op) {
        case ArithOp::Add: return add(a, b);
        case ArithOp::Sub: return sub(a, b);
        case ArithOp::Mul: return mul(a, b);
        case ArithOp::Inv: return inv(a);
        case ArithOp::Neg: return neg(a);
        case ArithOp::Pow: return pow(a, exponent);
        }
        return a;
    }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.data_ == b.data_ ||
               (a.characteristic() == b.characteristic() && a.modulus() == b.modulus());
    }

private:
    struct Data {
        std::uint32_t p = 0, e = 0, q = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<std::uint32_t> add, mul, neg, inv;
    };

    std::size_t idx(FieldElement a, FieldElement b) const noexcept {
        return static_cast<std::size_t>(a.value) * data_->q + b.value;
    }

    static std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
        for (std::uint32_t b = 1; b < p; ++b)
            if (a * b % p == 1) return b;
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }

    static void build_tables(Data& d) {
        const std::uint32_t q = d.q, p = d.p, e = d.e;
        auto digits = [&](std::uint32_t v) {
            std::vector<std::uint32_t> c(e);
            for (auto& x : c) {
                x = v % p;
                v /= p;
            }
            return c;
        };
        auto pack = [&](const std::vector<std::uint32_t>& c) {
            std::uint32_t v = 0, s = 1;
            for (std::size_t i = 0; i < e && i < c.size(); ++i) {
                v += c[i] * s;
                s *= p;
            }
            return v;
        };
        d.add.resize(std::size_t(q) * q);
        d.mul.resize(std::size_t(q) * q);
        d.neg.resize(q);
        d.inv.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            const auto ca = digits(a);
            std::vector<std::uint32_t> n(e);
            for (std::uint32_t i = 0; i < e; ++i) n[i] = (p - ca[i]) % p;
            d.neg[a] = pack(n);
            for (std::uint32_t b = 0; b < q; ++b) {
                const auto cb = digits(b);
                std::vector<std::uint32_t> s(e), prod(2 * e - 1, 0);
                for (std::uint32_t i = 0; i < e; ++i) s[i] = (ca[i] + cb[i]) % p;
                for (std::uint32_t i = 0; i < e; ++i)
                    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                d.add[std::size_t(a) * q + b] = pack(s);
                d.mul[std::size_t(a) * q + b] = pack(detail::poly_mod(prod, d.modulus, p));
            }
        }
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (d.mul[std::size_t(a) * q + b] == 1) {
                    d.inv[a] = b;
                    break;
                }
    }

    std::shared_ptr<const Data> data_;
};

/// The Tits endomorphism x -> x^(2^(e+1)) of GF(2^(2e+1)); applying it twice
/// squares its argument.
inline FieldElement tits_sigma(const Field& f, FieldElement x) {
    if (f.characteristic() != 2 || f.degree() % 2 == 0)
        throw Error(ErrorCode::WrongFieldOrder,
                    "Tits endomorphism needs q = 2^(2e+1), got q = " + std::to_string(f.order()));
    const std::uint32_t half = (f.degree() - 1) / 2;
    FieldElement r = x;
    for (std::uint32_t i = 0; i <= half; ++i) r = f.mul(r, r);
    return r;
}

} // namespace evencycle

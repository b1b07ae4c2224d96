#pragma once

// Finite commutative rings modelled as ordered products of local factors Z_{p^k}
// and abstract fields F_q, together with element enumeration and the zero-product
// relation that both zero-divisor graphs are built from.

#include <zdl/error.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdl {

inline constexpr std::uint64_t default_enumeration_cap = 500'000;

// ---------------------------------------------------------------------------
// small number theory

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime-power factorisation of n >= 2, primes ascending.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// (p, k) with n = p^k, or nullopt when n is not a prime power.
inline std::optional<std::pair<std::uint64_t, int>> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// ---------------------------------------------------------------------------
// factors and ring specs

/// One factor of the decomposition: either Z_{p^k} or an abstract field F_q.
///
/// Field factors carry no multiplication table. Only the zero-product relation
/// is observable in the graphs, and in a field ab = 0 iff a = 0 or b = 0.
struct Factor {
    enum class Kind { Field, LocalZ };  // declaration order is the canonical kind order

    Kind kind = Kind::LocalZ;
    std::uint64_t prime = 2;  // p for Z_{p^k}; characteristic for F_q
    int exponent = 1;         // k for Z_{p^k}; e with q = p^e for F_q

    static Factor local(std::uint64_t p, int k) {
        if (!is_prime(p)) throw InvalidArgument("Z_{p^k} factor needs prime p, got " + std::to_string(p));
        if (k < 1) throw InvalidArgument("Z_{p^k} factor needs k >= 1");
        return Factor{Kind::LocalZ, p, k};
    }

    static Factor field(std::uint64_t q) {
        auto pp = as_prime_power(q);
        if (!pp) throw InvalidArgument("F" + std::to_string(q) + ": field order must be a prime power");
        return Factor{Kind::Field, pp->first, pp->second};
    }

    std::uint64_t order() const { return ipow(prime, exponent); }
    bool is_field_like() const { return kind == Kind::Field || exponent == 1; }

    std::string to_string() const {
        return (kind == Kind::Field ? "F" : "Z") + std::to_string(order());
    }

    auto operator<=>(const Factor&) const = default;
};

using Element = std::vector<std::uint64_t>;

enum class ElementKind { Zero, Unit, ZeroDivisor };

/// Per-component classification used to key partite classes.
enum class ComponentClass : std::uint8_t { Zero, Unit, ZeroDiv };
using ZeroPattern = std::vector<ComponentClass>;

/// A finite commutative ring as a canonical ordered product of factors.
class RingSpec {
public:
    RingSpec() = default;

    explicit RingSpec(std::vector<Factor> factors, std::uint64_t cap = default_enumeration_cap)
        : factors_(std::move(factors)) {
        if (factors_.empty()) throw InvalidArgument("ring spec needs at least one factor");
        std::sort(factors_.begin(), factors_.end());
        std::uint64_t total = 1;
        for (const auto& f : factors_) {
            total *= f.order();
            if (total > cap) throw CapExceeded("ring enumeration", static_cast<long long>(total), static_cast<long long>(cap));
        }
        order_ = total;
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    std::uint64_t order() const noexcept { return order_; }

    /// True when every factor is a field (Z_p counts as one).
    bool is_reduced() const {
        return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.is_field_like(); });
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "x";
            s += factors_[i].to_string();
        }
        return s;
    }

    bool operator==(const RingSpec& o) const { return factors_ == o.factors_; }

private:
    std::vector<Factor> factors_;
    std::uint64_t order_ = 0;
};

/// Parses `term ("x" term)*` with `term := "Z" int | "F" int`, case-insensitive,
/// whitespace ignored. Composite Z{m} is split into its prime-power factors.
inline RingSpec parse_ring_spec(std::string_view text, std::uint64_t cap = default_enumeration_cap) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s.empty()) throw ParseError("empty ring spec");

    std::vector<Factor> factors;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("ring spec '" + std::string(text) + "': " + why + " at offset " + std::to_string(i));
    };
    while (true) {
        if (i >= s.size()) fail("expected term");
        char kind = s[i];
        if (kind != 'z' && kind != 'f') fail("expected 'Z' or 'F'");
        ++i;
        std::size_t start = i;
        std::uint64_t value = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            value = value * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (value > 1'000'000'000'000ULL) fail("integer too large");
            ++i;
        }
        if (i == start) fail("expected integer");
        if (value < 2) fail("integer must be >= 2");
        if (kind == 'f') {
            if (!as_prime_power(value)) throw ParseError("F" + std::to_string(value) + ": field order must be a prime power");
            factors.push_back(Factor::field(value));
        } else {
            for (auto [p, k] : factorize(value)) factors.push_back(Factor::local(p, k));
        }
        if (i == s.size()) break;
        if (s[i] != 'x') fail("expected 'x'");
        ++i;
    }
    return RingSpec(std::move(factors), cap);
}

// ---------------------------------------------------------------------------
// elements

inline void check_membership(const Element& e, const RingSpec& spec) {
    if (e.size() != spec.size())
        throw InvalidArgument("element has " + std::to_string(e.size()) + " components, ring has " +
                              std::to_string(spec.size()) + " factors");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] >= spec.factors()[i].order()) throw InvalidArgument("element component out of range");
}

/// All elements in lexicographic component order (last component varies fastest).
inline std::vector<Element> enumerate_elements(const RingSpec& spec, std::uint64_t cap = default_enumeration_cap) {
    if (spec.order() > cap) throw CapExceeded("ring enumeration", static_cast<long long>(spec.order()), static_cast<long long>(cap));
    std::vector<Element> out;
    out.reserve(spec.order());
    Element cur(spec.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t pos = cur.size();
        while (pos > 0) {
            --pos;
            if (++cur[pos] < spec.factors()[pos].order()) break;
            cur[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

inline ComponentClass classify_component(std::uint64_t x, const Factor& f) {
    if (x == 0) return ComponentClass::Zero;
    if (f.kind == Factor::Kind::Field) return ComponentClass::Unit;
    return x % f.prime == 0 ? ComponentClass::ZeroDiv : ComponentClass::Unit;
}

inline bool product_is_zero(const Element& a, const Element& b, const RingSpec& spec) {
    check_membership(a, spec);
    check_membership(b, spec);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& f = spec.factors()[i];
        if (f.kind == Factor::Kind::Field) {
            if (a[i] != 0 && b[i] != 0) return false;
        } else if ((a[i] * b[i]) % f.order() != 0) {
            return false;
        }
    }
    return true;
}

inline ZeroPattern zero_pattern(const Element& e, const RingSpec& spec) {
    check_membership(e, spec);
    ZeroPattern z(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) z[i] = classify_component(e[i], spec.factors()[i]);
    return z;
}

/// Zero, unit, or zero divisor. In a finite commutative ring every nonzero non-unit
/// is a zero divisor, so the unit test per component suffices.
inline ElementKind classify_element(const Element& e, const RingSpec& spec) {
    auto z = zero_pattern(e, spec);
    if (std::all_of(z.begin(), z.end(), [](ComponentClass c) { return c == ComponentClass::Zero; })) return ElementKind::Zero;
    if (std::all_of(z.begin(), z.end(), [](ComponentClass c) { return c == ComponentClass::Unit; })) return ElementKind::Unit;
    return ElementKind::ZeroDivisor;
}

inline std::string format_element(const Element& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

inline std::string pattern_key(const ZeroPattern& z) {
    std::string s;
    for (auto c : z) s += c == ComponentClass::Zero ? '0' : c == ComponentClass::Unit ? 'u' : 'z';
    return s;
}

/// p-adic valuation of a residue in Z_{p^k}; k for zero.
inline int valuation(std::uint64_t x, const Factor& f) {
    if (x == 0) return f.exponent;
    int v = 0;
    while (x % f.prime == 0) {
        x /= f.prime;
        ++v;
    }
    return v;
}

}  // namespace zdl

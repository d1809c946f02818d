#include "theta/field.hpp"

#include "theta/error.hpp"

#include <string>
#include <utility>

namespace theta {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficient i of x^i, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0 mod p
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint64_t k = p - 2;
    while (k) {
        if (k & 1) result = result * base % p;
        base = base * base % p;
        k >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo b (b nonzero) over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = std::uint64_t{factor} * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly monic_from_code(std::uint32_t code, std::uint32_t p, std::uint32_t degree) {
    Poly m(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        m[i] = code % p;
        code /= p;
    }
    m[degree] = 1;
    return m;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) {
    std::uint32_t r = 1;
    while (exp--) r *= base;
    return r;
}

bool irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= e / 2; ++d) {
        const std::uint32_t count = ipow(p, d);
        for (std::uint32_t code = 0; code < count; ++code)
            if (poly_mod(f, monic_from_code(code, p, d), p).empty()) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower as_prime_power(std::uint32_t q) {
    if (q < 2) return {};
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return {};
    return {p, e};
}

std::uint64_t find_prime_in_range(std::uint64_t n) {
    if (n <= 1) throw RangeError("find_prime_in_range needs n > 1");
    for (std::uint64_t c = n + 1; c < 2 * n; ++c)
        if (is_prime(c)) return c;
    throw RangeError("no prime in (n, 2n)");  // unreachable by Bertrand's postulate
}

Field Field::make(std::uint32_t q) {
    const PrimePower pp = as_prime_power(q);
    if (pp.exponent == 0) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (q > kMaxOrder) throw SizeLimit("field order " + std::to_string(q) + " exceeds 2^16");

    Field f;
    f.q_ = q;
    f.p_ = pp.prime;
    f.e_ = pp.exponent;
    if (f.e_ == 1) {
        f.modulus_ = {0, 1};
    } else {
        const std::uint32_t count = ipow(f.p_, f.e_);
        for (std::uint32_t code = 0; code < count; ++code) {
            Poly m = monic_from_code(code, f.p_, f.e_);
            if (irreducible(m, f.p_)) {
                f.modulus_ = std::move(m);
                break;
            }
        }
    }

    f.neg_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint32_t code = a;
        std::uint32_t out = 0;
        std::uint32_t place = 1;
        for (std::uint32_t i = 0; i < f.e_; ++i) {
            out += ((f.p_ - code % f.p_) % f.p_) * place;
            code /= f.p_;
            place *= f.p_;
        }
        f.neg_[a] = out;
    }

    // Log tables from a primitive element.
    f.log_.assign(q, 0);
    f.exp_.assign(2 * (q - 1), 0);
    for (std::uint32_t g = (q == 2 ? 1 : 2); g < q; ++g) {
        std::uint32_t x = 1;
        std::uint32_t order = 0;
        do {
            f.exp_[order] = x;
            x = f.mul_slow({x}, {g}).code;
            ++order;
        } while (x != 1 && order < q - 1);
        if (x == 1 && order == q - 1) break;
    }
    for (std::uint32_t k = 0; k < q - 1; ++k) {
        f.exp_[k + q - 1] = f.exp_[k];
        f.log_[f.exp_[k]] = k;
    }

    if (q <= kFullTableLimit) {
        f.add_table_.resize(std::size_t{q} * q);
        f.mul_table_.resize(std::size_t{q} * q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                f.add_table_[a * q + b] = static_cast<std::uint16_t>(f.add_slow({a}, {b}).code);
                f.mul_table_[a * q + b] = static_cast<std::uint16_t>(f.mul_slow({a}, {b}).code);
            }
    }
    return f;
}

FieldElement Field::element(std::uint32_t code) const {
    if (code >= q_) throw RangeError("element code " + std::to_string(code) + " out of range");
    return {code};
}

FieldElement Field::add_slow(FieldElement a, FieldElement b) const {
    if (e_ == 1) return {(a.code + b.code) % p_};
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += ((a.code % p_ + b.code % p_) % p_) * place;
        a.code /= p_;
        b.code /= p_;
        place *= p_;
    }
    return {out};
}

FieldElement Field::mul_slow(FieldElement a, FieldElement b) const {
    if (e_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
    Poly pa(e_), pb(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        pa[i] = a.code % p_;
        pb[i] = b.code % p_;
        a.code /= p_;
        b.code /= p_;
    }
    Poly prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    Poly r = poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return {out};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (!add_table_.empty()) return {add_table_[a.code * q_ + b.code]};
    return add_slow(a, b);
}

FieldElement Field::neg(FieldElement a) const { return {neg_[a.code]}; }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (!mul_table_.empty()) return {mul_table_[a.code * q_ + b.code]};
    if (a.code == 0 || b.code == 0) return {0};
    return {exp_[log_[a.code] + log_[b.code]]};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.code == 0) throw RangeError("zero has no inverse");
    return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t k) const {
    FieldElement result = one();
    while (k) {
        if (k & 1) result = mul(result, a);
        a = mul(a, a);
        k >>= 1;
    }
    return result;
}

Vec4 moment_curve(const Field& f, FieldElement z) {
    const FieldElement z2 = f.mul(z, z);
    return {f.one(), z, z2, f.mul(z2, z)};
}

int rank4(const Field& f, std::array<Vec4, 4> rows) {
    int rank = 0;
    for (int col = 0; col < 4 && rank < 4; ++col) {
        int pivot = -1;
        for (int r = rank; r < 4; ++r)
            if (rows[r][col].code != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElement inv = f.inv(rows[rank][col]);
        for (int r = 0; r < 4; ++r) {
            if (r == rank || rows[r][col].code == 0) continue;
            const FieldElement factor = f.mul(rows[r][col], inv);
            for (int c = 0; c < 4; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

bool moment_independence(const Field& f, const std::array<FieldElement, 4>& z) {
    std::array<Vec4, 4> rows{};
    for (int i = 0; i < 4; ++i) rows[i] = moment_curve(f, z[i]);
    return rank4(f, rows) == 4;
}

}  // namespace theta

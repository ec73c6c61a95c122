/*
   Copyright 2026 The ratgf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <ratgf/poly.hpp>

#include <gmp.h>

#include <algorithm>
#include <cstring>

namespace ratgf {

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t bit_length(const Integer& x) {
    return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t max_bits(const PolyZ& p) {
    std::size_t m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, bit_length(c));
    return m;
}

std::size_t round_to_limbs(std::size_t bits) { return (bits + kLimbBits - 1) / kLimbBits; }

// Writes the magnitudes of the coefficients with the requested sign into
// consecutive chunks of `chunk` limbs.
void pack_sign(const PolyZ& p, std::size_t chunk, int sign, Integer& out) {
    const std::size_t total = chunk * p.size();
    mp_limb_t* dst = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(total));
    std::memset(dst, 0, total * sizeof(mp_limb_t));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const mpz_srcptr c = p.coeffs()[i].get_mpz_t();
        if (mpz_sgn(c) != sign) continue;
        const std::size_t n = mpz_size(c);
        std::memcpy(dst + i * chunk, mpz_limbs_read(c), n * sizeof(mp_limb_t));
    }
    mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(total));
}

// p(2^(chunk * limb bits)) as a single integer.
Integer pack(const PolyZ& p, std::size_t chunk) {
    Integer pos, neg;
    pack_sign(p, chunk, 1, pos);
    pack_sign(p, chunk, -1, neg);
    return pos - neg;
}

// Inverse of pack() for balanced digits |c_i| < 2^(B-1). Returns false if
// more than `count` digits are needed or a digit exceeds `digit_bits` bits.
bool unpack(const Integer& x, std::size_t chunk, std::size_t count, std::size_t digit_bits,
            std::vector<Integer>& digits) {
    digits.assign(count, Integer(0));
    if (sgn(x) == 0) return true;
    const int s = sgn(x);
    Integer ax = abs(x);
    const mp_limb_t* xp = mpz_limbs_read(ax.get_mpz_t());
    const std::size_t xn = mpz_size(ax.get_mpz_t());
    const std::size_t bits = chunk * kLimbBits;
    Integer half, full;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, bits);
    half = full / 2;
    int carry = 0;
    std::size_t i = 0;
    for (; i * chunk < xn || carry != 0; ++i) {
        Integer r = 0;
        const std::size_t start = i * chunk;
        if (start < xn) {
            const std::size_t len = std::min(chunk, xn - start);
            mpz_import(r.get_mpz_t(), len, -1, sizeof(mp_limb_t), 0, 0, xp + start);
        }
        r += carry;
        if (r >= half) {
            r -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        if (i >= count) {
            if (sgn(r) != 0) return false;
            continue;
        }
        if (bit_length(r) > digit_bits) return false;
        digits[i] = s > 0 ? r : Integer(-r);
    }
    return true;
}

Integer max_abs_min(const PolyZ& a, const PolyZ& b) {
    Integer ma = 0, mb = 0;
    for (const auto& c : a.coeffs()) ma = std::max(ma, Integer(abs(c)));
    for (const auto& c : b.coeffs()) mb = std::max(mb, Integer(abs(c)));
    return std::min(ma, mb);
}

PolyZ normalize_sign(PolyZ p) {
    if (!p.is_zero() && sgn(p.leading()) < 0) return -p;
    return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
PolyZ pseudo_remainder(const PolyZ& a, const PolyZ& b) {
    std::vector<Integer> r = a.coeffs();
    const int db = b.degree();
    const Integer& lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const Integer lead = r[static_cast<std::size_t>(i)];
        for (auto& c : r) c *= lb;
        if (sgn(lead) != 0)
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= lead * b.coeffs()[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = 0;
    }
    return PolyZ(std::move(r));
}

PolyZ primitive_prs_gcd(PolyZ a, PolyZ b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PolyZ r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return normalize_sign(primitive_part(a));
}

bool divides(const PolyZ& g, const PolyZ& p) {
    if (g.degree() > p.degree()) return false;
    try {
        (void)exact_div(p, g);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

}  // namespace

namespace detail {

PolyZ kronecker_mul(const PolyZ& a, const PolyZ& b) {
    const std::size_t n = std::min(a.size(), b.size());
    const std::size_t bits = max_bits(a) + max_bits(b) + bit_length(Integer(static_cast<unsigned long>(n))) + 2;
    const std::size_t chunk = round_to_limbs(bits);
    Integer x = pack(a, chunk) * pack(b, chunk);
    std::vector<Integer> digits;
    unpack(x, chunk, a.size() + b.size() - 1, chunk * kLimbBits, digits);
    return PolyZ(std::move(digits));
}

bool kronecker_exact_div(const PolyZ& a, const PolyZ& b, PolyZ& q) {
    const std::size_t nq = a.size() - b.size() + 1;
    // Any exact quotient obeys |q_j| <= 2^(nq-1) * ||a||_2 (Mignotte).
    const std::size_t q_bits = max_bits(a) + (nq - 1) + (bit_length(Integer(static_cast<unsigned long>(a.size()))) + 1) / 2 + 1;
    const std::size_t bits =
        std::max(q_bits + max_bits(b) + bit_length(Integer(static_cast<unsigned long>(b.size()))), max_bits(a)) + 2;
    const std::size_t chunk = round_to_limbs(bits);
    const Integer xa = pack(a, chunk);
    const Integer xb = pack(b, chunk);
    Integer xq, xr;
    mpz_tdiv_qr(xq.get_mpz_t(), xr.get_mpz_t(), xa.get_mpz_t(), xb.get_mpz_t());
    if (sgn(xr) != 0) return false;
    std::vector<Integer> digits;
    // Digits within the bounds make q*b and a agree coefficientwise, since
    // both then have balanced base-2^B expansions of the same integer.
    if (!unpack(xq, chunk, nq, q_bits, digits)) return false;
    q = PolyZ(std::move(digits));
    return true;
}

}  // namespace detail

Integer content(const PolyZ& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolyZ primitive_part(const PolyZ& p) {
    if (p.is_zero()) return p;
    Integer c = content(p);
    if (sgn(p.leading()) < 0) c = -c;
    if (c == 1) return p;
    std::vector<Integer> v = p.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return PolyZ(std::move(v));
}

PolyZ gcd(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    Integer c;
    const Integer ca = content(a), cb = content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.degree() == 0 || b.degree() == 0) return PolyZ(c);
    const PolyZ pa = primitive_part(a), pb = primitive_part(b);
    if (pa == pb) return pa.scaled(c);

    // Heuristic gcd: evaluate at a power of two above 2*min(|a|,|b|)+2, take
    // the integer gcd and read back its balanced digits. A candidate that
    // divides both inputs is the true gcd.
    // The chunk must also hold every coefficient of both inputs for packing.
    std::size_t xi_bits = std::max({bit_length(max_abs_min(pa, pb)) + 3, max_bits(pa) + 1, max_bits(pb) + 1});
    for (int attempt = 0; attempt < 4; ++attempt) {
        const std::size_t chunk = round_to_limbs(xi_bits);
        const Integer xa = pack(pa, chunk);
        const Integer xb = pack(pb, chunk);
        Integer xg;
        mpz_gcd(xg.get_mpz_t(), xa.get_mpz_t(), xb.get_mpz_t());
        std::vector<Integer> digits;
        const std::size_t count = std::min(pa.size(), pb.size());
        if (unpack(xg, chunk, count, chunk * kLimbBits, digits)) {
            PolyZ g = primitive_part(PolyZ(std::move(digits)));
            if (!g.is_zero() && divides(g, pa) && divides(g, pb)) return normalize_sign(g).scaled(c);
        }
        xi_bits = chunk * kLimbBits * 2;
    }
    return primitive_prs_gcd(pa, pb).scaled(c);
}

PolyQ to_rational(const PolyZ& p) {
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return PolyQ(std::move(v));
}

std::pair<Integer, PolyZ> clear_denominators(const PolyQ& p) {
    Integer m = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.push_back(c.get_num() * (m / c.get_den()));
    return {m, PolyZ(std::move(v))};
}

}  // namespace ratgf

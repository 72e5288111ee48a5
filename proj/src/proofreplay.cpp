#include "banach/proofreplay.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "banach/bigint.hpp"
#include "banach/congruence.hpp"
#include "banach/exactmath.hpp"
#include "banach/modarith.hpp"
#include "banach/rational.hpp"

namespace banach {

namespace {

void check_pair(uint32_t p, uint32_t k) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("modulus must be an odd number >= 3, got " +
                                    std::to_string(p));
    }
    if (k < 1 || k > (p - 1) / 2) {
        throw std::invalid_argument("k must lie in [1, " +
                                    std::to_string((p - 1) / 2) + "] for p = " +
                                    std::to_string(p) + ", got " +
                                    std::to_string(k));
    }
}

}  // namespace

void SparsePoly::add_term(uint64_t exponent, uint64_t coefficient) {
    const uint32_t c = static_cast<uint32_t>(coefficient % modulus);
    if (c == 0) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), exponent,
                               [](const auto& term, uint64_t e) { return term.first < e; });
    if (it != terms.end() && it->first == exponent) {
        const uint32_t merged = (it->second + c) % modulus;
        if (merged == 0) {
            terms.erase(it);
        } else {
            it->second = merged;
        }
    } else {
        terms.insert(it, {exponent, c});
    }
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
    if (a.modulus != b.modulus) {
        throw std::invalid_argument("cannot add polynomials over different moduli");
    }
    SparsePoly sum;
    sum.modulus = a.modulus;
    sum.terms = a.terms;
    for (const auto& [e, c] : b.terms) sum.add_term(e, c);
    return sum;
}

SparsePoly geometric_poly(uint32_t p, uint32_t k) {
    check_pair(p, k);
    SparsePoly poly;
    poly.modulus = p;
    // Exponents i+k-1 for i = 1..p-2k-1; empty range when k = (p-1)/2.
    for (uint64_t e = k; e + k + 2 <= p; ++e) poly.terms.push_back({e, 1});
    return poly;
}

SparsePoly derivative(const SparsePoly& poly, uint32_t order) {
    const uint32_t p = poly.modulus;
    SparsePoly result;
    result.modulus = p;
    for (const auto& [e, c] : poly.terms) {
        if (e < order) continue;
        uint32_t coeff = c;
        for (uint32_t t = 0; t < order && coeff != 0; ++t) {
            coeff = mulmod(coeff, static_cast<uint32_t>((e - t) % p), p);
        }
        // Exponents stay in input order, so the result stays sorted.
        if (coeff != 0) result.terms.push_back({e - order, coeff});
    }
    return result;
}

uint32_t evaluate(const SparsePoly& poly, uint32_t x) {
    const uint32_t p = poly.modulus;
    uint32_t value = 0;
    for (const auto& [e, c] : poly.terms) {
        value = static_cast<uint32_t>(
            (value + static_cast<uint64_t>(c) * powmod(x, e, p)) % p);
    }
    return value;
}

ReducedIdentities reduced_identities(uint32_t k) {
    ReducedIdentities out;
    const BigInt k_fact = factorial_exact(k);

    // I1.  Left side carries the negative powers of 2; the right side is the
    // binomial expansion of k! (2-1)^k.
    {
        Rational lhs;
        Rational rhs;
        BigInt rising(1);  // (k+1)(k+2)...(k+j)
        for (uint32_t j = 0; j <= k; ++j) {
            if (j > 0) rising *= BigInt::from_u64(static_cast<uint64_t>(k) + j);
            const BigInt weight = binomial_exact(k, j) * factorial_exact(k - j) * rising;
            lhs += Rational(weight) *
                   pow2_rational(-static_cast<int64_t>(k) - static_cast<int64_t>(j));
            Rational term = Rational(binomial_exact(k, j)) *
                            Rational(BigInt::pow2(k - j));
            rhs += (j % 2 == 0) ? term : -term;
        }
        rhs *= Rational(k_fact);
        out.i1 = (lhs == rhs) && (rhs == Rational(k_fact));
    }

    // I2.
    {
        Rational lhs;
        for (uint32_t j = 0; j <= k; ++j) {
            const BigInt weight = binomial_exact(k, j) * factorial_exact(k - j) *
                                  factorial_exact(static_cast<uint64_t>(k) + j);
            lhs += Rational(weight) * pow2_rational(-static_cast<int64_t>(j));
        }
        const Rational rhs = Rational(BigInt::pow2(k) * k_fact * k_fact);
        out.i2 = (lhs == rhs);
    }

    // I3.
    {
        Rational lhs;
        for (uint32_t j = 0; j <= k; ++j) {
            lhs += Rational(binomial_exact(static_cast<uint64_t>(k) + j, k)) *
                   pow2_rational(-static_cast<int64_t>(j));
        }
        out.i3 = (lhs == Rational(BigInt::pow2(k)));
    }

    // I4.
    {
        Rational lhs;
        for (uint32_t i = 0; i <= k; ++i) {
            lhs += Rational(binomial_exact(2 * static_cast<uint64_t>(k) - i, k)) *
                   pow2_rational(static_cast<int64_t>(i) - static_cast<int64_t>(k));
        }
        out.i4 = (lhs == Rational(BigInt::pow2(k)));
    }

    return out;
}

ChainReport chain_check(uint32_t p, uint32_t k) {
    check_pair(p, k);
    const ModContext ctx = make_context(p);

    ChainReport report;
    report.p = p;
    report.k = k;

    report.lhs_direct = evaluate(derivative(geometric_poly(p, k), k), 2);

    // Leibniz route: the k-th derivative of (x^{p-1-k} - x^k) / (x - 1) at
    // x = 2 is sum_j C(k,j) * D_j * (-1)^{k-j} (k-j)!, where D_j is the j-th
    // derivative of the numerator at 2 and the last factor is the (k-j)-th
    // derivative of 1/(x-1) there.
    const uint32_t inv2 = (p + 1) / 2;
    uint32_t fall_a = 1;  // (p-1-k)(p-2-k)...(p-k-j)
    uint32_t fall_b = 1;  // k(k-1)...(k-j+1)
    uint32_t acc = 0;
    for (uint32_t j = 0; j <= k; ++j) {
        if (j > 0) {
            fall_a = mulmod(fall_a, p - k - j, p);
            fall_b = mulmod(fall_b, k - j + 1, p);
        }
        const uint32_t a = mulmod(fall_a, powmod(2, p - 1 - k - j, p), p);
        // 2^{p-1-k-j} = 2^{p-1} * 2^{-k-j}, and 2^{p-1} = 1 for prime p, so
        // the literal exponent and the reduced one must give the same term.
        const uint32_t a_reduced = mulmod(fall_a, powmod(inv2, static_cast<uint64_t>(k) + j, p), p);
        if (a != a_reduced) {
            throw std::logic_error("exponent reduction by p-1 changed a term at p = " +
                                   std::to_string(p) + ", k = " + std::to_string(k) +
                                   ", j = " + std::to_string(j) +
                                   " (is p really prime?)");
        }
        const uint32_t b = mulmod(fall_b, powmod(2, k - j, p), p);
        const uint32_t d = (a + p - b) % p;
        uint32_t term = mulmod(mulmod(binom_mod(ctx, k, j), ctx.fact[k - j], p), d, p);
        if ((k - j) % 2 == 1) term = (p - term) % p;
        acc = (acc + term) % p;
    }
    report.lhs_leibniz = acc;

    if (report.lhs_direct != report.lhs_leibniz) {
        throw std::logic_error("derivative routes disagree at p = " + std::to_string(p) +
                               ", k = " + std::to_string(k) + ": direct " +
                               std::to_string(report.lhs_direct) + ", expanded " +
                               std::to_string(report.lhs_leibniz));
    }
    const uint32_t expected = mulmod(ctx.fact[k], sum_kernel_incremental(ctx, k), p);
    if (report.lhs_direct != expected) {
        throw std::logic_error("derivative value differs from k! times the sum at p = " +
                               std::to_string(p) + ", k = " + std::to_string(k));
    }

    report.identities = reduced_identities(k);
    return report;
}

}  // namespace banach

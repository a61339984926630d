#include "braidex/rational.hpp"

#include <numeric>

namespace braidex {

Fraction Fraction::make(long long alpha, long long beta) {
    if (alpha <= 0 || beta <= 0)
        throw InputError("fraction must be positive");
    if (beta >= alpha)
        throw InputError("fraction must satisfy 0 < beta < alpha");
    if (std::gcd(alpha, beta) != 1)
        throw InputError("fraction must be in lowest terms (gcd 1)");
    return Fraction{alpha, beta};
}

std::vector<int> odd_continued_fraction(const Fraction& f) {
    std::vector<int> cf;
    long long num = f.alpha, den = f.beta;
    while (den > 0) {
        cf.push_back(static_cast<int>(num / den));
        num %= den;
        std::swap(num, den);
    }
    if (cf.size() % 2 == 0) {
        // normalize to odd length: [..., m] = [..., m-1, 1] for m >= 2,
        // and [..., x, 1] = [..., x+1]
        if (cf.back() >= 2) {
            cf.back() -= 1;
            cf.push_back(1);
        } else {
            cf.pop_back();
            cf.back() += 1;
        }
    }
    check(fraction_of_cf(cf) == f, "odd_continued_fraction: reconstruction "
                                   "failed");
    return cf;
}

Fraction fraction_of_cf(const std::vector<int>& cf) {
    check(!cf.empty(), "fraction_of_cf: empty vector");
    long long num = 1, den = cf.back();
    for (int i = static_cast<int>(cf.size()) - 2; i >= 0; --i) {
        // 1/(a_i + num/den) = den / (a_i*den + num)
        num += cf[i] * den;
        std::swap(num, den);
    }
    // value is num/den = beta/alpha
    return Fraction{den, num};
}

SignedVector SignedVector::from_entries(std::vector<int> entries) {
    check(!entries.empty() && entries.size() % 2 == 1,
          "signed vector must have odd length");
    SignedVector sv;
    sv.entries = std::move(entries);
    int start = 0;
    for (int i = 0; i < static_cast<int>(sv.entries.size()); ++i) {
        check(sv.entries[i] != 0, "signed vector entries must be nonzero");
        const bool last = i + 1 == static_cast<int>(sv.entries.size());
        const bool flips =
            !last && (sv.entries[i] > 0) != (sv.entries[i + 1] > 0);
        if (last || flips) {
            sv.blocks.push_back(
                Block{start, i, sv.entries[start] > 0 ? 1 : -1});
            start = i + 1;
        }
    }
    return sv;
}

SignedVector signed_vector(const FourPlat& plat) {
    const int n = static_cast<int>(plat.cf.size());
    std::vector<int> sign_of_entry(n + 1, 0);
    for (const Crossing& x : plat.diagram.crossings) {
        check(x.tag >= 1 && x.tag <= n, "signed_vector: untagged crossing");
        if (sign_of_entry[x.tag] == 0)
            sign_of_entry[x.tag] = x.sign;
        else
            check(sign_of_entry[x.tag] == x.sign,
                  "signed_vector: mixed signs within one entry");
    }
    std::vector<int> entries(n);
    for (int i = 1; i <= n; ++i) {
        check(sign_of_entry[i] != 0, "signed_vector: entry without "
                                     "crossings");
        entries[i - 1] = sign_of_entry[i] * plat.cf[i - 1];
    }
    return SignedVector::from_entries(std::move(entries));
}

long long braid_index_rational(const SignedVector& sv, PlatForm form) {
    const auto& b = sv.entries;
    const int n = static_cast<int>(b.size());
    // computed in quarters so the sign terms stay exact
    long long quarters = 4;
    if (form == PlatForm::standard) {
        quarters += 2 + sv.sign_first() + sv.sign_last();
        for (int i = 0; i < n; ++i) {
            const bool even_position = (i + 1) % 2 == 0;
            if (even_position && b[i] > 0) quarters += 2LL * b[i];
            if (!even_position && b[i] < 0) quarters += 2LL * -b[i];
        }
    } else {
        quarters += 2 - sv.sign_first() - sv.sign_last();
        for (int i = 0; i < n; ++i) {
            const bool even_position = (i + 1) % 2 == 0;
            if (even_position && b[i] < 0) quarters += 2LL * -b[i];
            if (!even_position && b[i] > 0) quarters += 2LL * b[i];
        }
    }
    check(quarters % 4 == 0,
          "braid_index_rational: non-integer result, signed vector does not "
          "come from a standard diagram of the chosen form");
    return quarters / 4;
}

}  // namespace braidex

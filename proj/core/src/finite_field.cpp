#include "qlattice/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qlattice {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Conway polynomials, monic, coefficients ascending (c_0 .. c_e with c_e = 1),
// for every non-prime prime power <= 256.
const std::map<int, std::vector<std::uint8_t>>& conway_table() {
    static const std::map<int, std::vector<std::uint8_t>> table = {
        {4, {1, 1, 1}},                   // x^2 + x + 1
        {8, {1, 1, 0, 1}},                // x^3 + x + 1
        {9, {2, 2, 1}},                   // x^2 + 2x + 2
        {16, {1, 1, 0, 0, 1}},            // x^4 + x + 1
        {25, {2, 4, 1}},                  // x^2 + 4x + 2
        {27, {1, 2, 0, 1}},               // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0, 1}},         // x^5 + x^2 + 1
        {49, {3, 6, 1}},                  // x^2 + 6x + 3
        {64, {1, 1, 0, 1, 1, 0, 1}},      // x^6 + x^4 + x^3 + x + 1
        {81, {2, 0, 0, 2, 1}},            // x^4 + 2x^3 + 2
        {121, {2, 7, 1}},                 // x^2 + 7x + 2
        {125, {3, 3, 0, 1}},              // x^3 + 3x + 3
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},  // x^7 + x + 1
        {169, {2, 12, 1}},                // x^2 + 12x + 2
        {243, {1, 2, 0, 0, 0, 1}},        // x^5 + 2x + 1
        {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}}, // x^8 + x^4 + x^3 + x^2 + 1
    };
    return table;
}

std::vector<std::uint8_t> digits_of(int code, int p, int e) {
    std::vector<std::uint8_t> d(e, 0);
    for (int i = 0; i < e && code > 0; ++i) {
        d[i] = static_cast<std::uint8_t>(code % p);
        code /= p;
    }
    return d;
}

int code_of(const std::vector<std::uint8_t>& d, int p) {
    int code = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
    return code;
}

} // namespace

bool factor_prime_power(int q, int& p, int& e) {
    if (q < 2) return false;
    int base = q;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    if (!is_prime(base)) return false;
    int v = q, exp = 0;
    while (v % base == 0) {
        v /= base;
        ++exp;
    }
    if (v != 1) return false;
    p = base;
    e = exp;
    return true;
}

FieldSpec::FieldSpec(int q) : q_(q) {
    if (q > 256) throw TooLarge("field order " + std::to_string(q) + " exceeds 256");
    if (!factor_prime_power(q, p_, e_))
        throw NotAPrimePower(std::to_string(q) + " is not a prime power");

    const std::size_t qq = static_cast<std::size_t>(q) * q;
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(q);
    inv_.assign(q, 0);

    if (e_ == 1) {
        for (int a = 0; a < q; ++a) {
            neg_[a] = static_cast<std::uint8_t>((q - a) % q);
            for (int b = 0; b < q; ++b) {
                add_[idx(a, b)] = static_cast<std::uint8_t>((a + b) % q);
                mul_[idx(a, b)] = static_cast<std::uint8_t>((a * b) % q);
            }
        }
    } else {
        auto it = conway_table().find(q);
        if (it == conway_table().end())
            throw NotAPrimePower("no modulus registered for order " + std::to_string(q));
        modulus_ = it->second;

        // x^m mod f for m = e .. 2e-2, as digit vectors of length e.
        std::vector<std::vector<std::uint8_t>> xpow(e_ - 1);
        std::vector<int> reduce(e_); // -modulus_ tail, i.e. x^e = reduce(x)
        for (int i = 0; i < e_; ++i) reduce[i] = (p_ - modulus_[i]) % p_;
        std::vector<std::uint8_t> cur(e_, 0);
        for (int i = 0; i < e_; ++i) cur[i] = static_cast<std::uint8_t>(reduce[i]);
        xpow[0] = cur;
        for (int m = 1; m < e_ - 1; ++m) {
            // multiply cur by x, reduce
            std::vector<std::uint8_t> nxt(e_, 0);
            int carry = cur[e_ - 1];
            for (int i = e_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            for (int i = 0; i < e_; ++i)
                nxt[i] = static_cast<std::uint8_t>((nxt[i] + carry * reduce[i]) % p_);
            cur = nxt;
            xpow[m] = cur;
        }

        for (int a = 0; a < q; ++a) {
            auto da = digits_of(a, p_, e_);
            std::vector<std::uint8_t> na(e_);
            for (int i = 0; i < e_; ++i) na[i] = static_cast<std::uint8_t>((p_ - da[i]) % p_);
            neg_[a] = static_cast<std::uint8_t>(code_of(na, p_));
            for (int b = 0; b < q; ++b) {
                auto db = digits_of(b, p_, e_);
                std::vector<std::uint8_t> s(e_);
                for (int i = 0; i < e_; ++i)
                    s[i] = static_cast<std::uint8_t>((da[i] + db[i]) % p_);
                add_[idx(a, b)] = static_cast<std::uint8_t>(code_of(s, p_));

                // schoolbook product, then reduce the high part with xpow
                std::vector<int> prod(2 * e_ - 1, 0);
                for (int i = 0; i < e_; ++i)
                    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                std::vector<std::uint8_t> red(e_, 0);
                for (int i = 0; i < e_; ++i) red[i] = static_cast<std::uint8_t>(prod[i]);
                for (int m = e_; m <= 2 * e_ - 2; ++m) {
                    int c = prod[m];
                    if (c == 0) continue;
                    const auto& xp = xpow[m - e_];
                    for (int i = 0; i < e_; ++i)
                        red[i] = static_cast<std::uint8_t>((red[i] + c * xp[i]) % p_);
                }
                mul_[idx(a, b)] = static_cast<std::uint8_t>(code_of(red, p_));
            }
        }
    }

    // Every nonzero element must have an inverse; a missing one would mean the
    // modulus is reducible.
    for (int a = 1; a < q; ++a) {
        int found = -1;
        for (int b = 1; b < q; ++b) {
            if (mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] == 1) {
                found = b;
                break;
            }
        }
        if (found < 0)
            throw Error("internal: GF(" + std::to_string(q) + ") element " + std::to_string(a) +
                        " has no inverse");
        inv_[a] = static_cast<std::uint8_t>(found);
    }
}

int FieldSpec::element_order(std::uint8_t a) const {
    if (a == 0) throw DivisionByZero("order of 0 is undefined");
    int ord = 1;
    std::uint8_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

const FieldSpec& FieldSpec::get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
        auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(q));
        it = cache.emplace(q, std::move(spec)).first;
    }
    return *it->second;
}

} // namespace qlattice

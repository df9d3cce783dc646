#include "qlattice/numeric.hpp"

#include <limits>

namespace qlattice {

BigRat parse_rational(const std::string& text) {
    auto bad = [&] { return ParseError("not a rational: '" + text + "'", 0); };
    if (text.empty()) throw bad();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
    }
    BigRat r;
    if (r.set_str(num + "/" + den, 10) != 0) throw bad();
    if (r.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

std::string to_decimal(const BigRat& v) {
    BigRat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str(10);
    return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || !v.fits_ulong_p()) {
        if (v < 0) throw RangeError("negative value where a count was expected");
        // fits_ulong_p covers 64-bit unsigned long on this platform.
        throw RangeError("count too large for a machine word: " + to_decimal(v));
    }
    return static_cast<std::uint64_t>(v.get_ui());
}

} // namespace qlattice

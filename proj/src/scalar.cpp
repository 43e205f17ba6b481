#include "m1poly/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace m1poly {

std::string Scalar::to_string() const {
    if (is_real()) return re_.to_string();
    std::string out = re_.to_string();
    if (im_.sign() >= 0) {
        out += "+" + im_.to_string();
    } else {
        out += "-" + (-im_).to_string();
    }
    out += "i";
    return out;
}

std::string render_scalar(const Scalar& s) { return s.to_string(); }

namespace {

// One signed rational: [+-]?digits(/digits)?
// Returns the value and advances pos past it.
Rational parse_rational_at(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    std::string num;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') num += '-';   // mpz_set_str rejects a leading '+'
        ++pos;
    }
    std::size_t digit_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        num += text[pos++];
    }
    if (pos == digit_start) throw parse_error("expected digits", pos);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            den += text[pos++];
        }
        if (pos == den_start) throw parse_error("expected denominator digits", pos);
        mpz_class n(num), d(den);
        if (d == 0) throw parse_error("zero denominator", den_start);
        mpq_class q;
        q.get_num() = n;
        q.get_den() = d;
        q.canonicalize();
        return Rational(q);
    }
    (void)start;
    return Rational(mpq_class(mpz_class(num)));
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    if (text.empty()) throw parse_error("empty scalar", 0);
    std::size_t pos = 0;

    // bare imaginary unit: i, +i, -i
    if (text == "i" || text == "+i") return Scalar::i();
    if (text == "-i") return -Scalar::i();

    Rational first = parse_rational_at(text, pos);
    if (pos == text.size()) return Scalar(first);

    if (text[pos] == 'i') {
        ++pos;
        if (pos != text.size()) throw parse_error("trailing characters after imaginary part", pos);
        return Scalar(Rational(0), first);
    }

    if (text[pos] != '+' && text[pos] != '-') {
        throw parse_error("expected '+', '-' or 'i'", pos);
    }
    // second signed rational, then mandatory 'i'
    std::size_t im_start = pos;
    Rational second;
    if ((text[pos] == '+' || text[pos] == '-') && pos + 1 < text.size() && text[pos + 1] == 'i') {
        // forms like "1/2+i" / "1/2-i"
        second = text[pos] == '+' ? Rational(1) : Rational(-1);
        pos += 2;
    } else {
        second = parse_rational_at(text, pos);
        if (pos >= text.size() || text[pos] != 'i') {
            throw parse_error("expected 'i' after imaginary part", pos);
        }
        ++pos;
    }
    (void)im_start;
    if (pos != text.size()) throw parse_error("trailing characters", pos);
    return Scalar(first, second);
}

} // namespace m1poly

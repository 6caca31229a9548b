#include "orbicat/scalar.hpp"

#include <ostream>

namespace orbicat {

namespace {
Field g_field = Field::Q;
}

void set_field(Field f) { g_field = f; }
Field current_field() { return g_field; }

void Scalar::require_real_field_zero_im(const mpq_class& im) {
    if (g_field == Field::Q && im != 0)
        throw FieldError("imaginary value constructed while the session field is Q");
}

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw FieldError("zero denominator");
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    require_real_field_zero_im(im_);
}

Scalar Scalar::i() {
    if (g_field == Field::Q) throw FieldError("i requested while the session field is Q");
    return Scalar(mpq_class(0), mpq_class(1));
}

Scalar Scalar::conj() const {
    if (g_field == Field::Q) return *this;
    return Scalar(re_, -im_, internal_tag{});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    // 1/(a+bi) = (a-bi)/(a^2+b^2)
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n, internal_tag{});
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
    if (im_ == 0) return re_.get_str();
    std::string out = re_.get_str();
    if (im_ > 0) {
        out += "+" + im_.get_str();
    } else {
        out += "-" + mpq_class(-im_).get_str();
    }
    out += " i";
    return out;
}

Scalar Scalar::parse(const std::string& text) {
    // Grammar: REAL | REAL ('+'|'-') RAT 'i' | RAT 'i', RAT = ['-']p['/'q].
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    auto parse_rat = [](std::string t) -> mpq_class {
        if (!t.empty() && t.front() == '+') t.erase(t.begin());
        if (t.empty()) throw ParseError("empty rational");
        try {
            mpq_class q(t);
            if (q.get_den() == 0) throw ParseError("zero denominator in '" + t + "'");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational '" + t + "'");
        }
    };

    bool has_i = !s.empty() && s.back() == 'i';
    if (!has_i) return Scalar(parse_rat(s));
    s.pop_back(); // drop 'i'

    // Split at the last '+'/'-' that is not a leading sign and not part of
    // a denominator; numerators/denominators contain no signs after pos 0.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    mpq_class re(0), im(1);
    if (split == std::string::npos) {
        im = s.empty() ? mpq_class(1) : parse_rat(s);
    } else {
        re = parse_rat(s.substr(0, split));
        std::string imtext = s.substr(split);
        if (imtext == "+")
            im = 1;
        else if (imtext == "-")
            im = -1;
        else
            im = parse_rat(imtext);
    }
    return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace orbicat

#include "m1taut/rational.hpp"

#include <ostream>

namespace m1taut {

Rat::Rat(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("Rat: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.v_;
}

}  // namespace m1taut

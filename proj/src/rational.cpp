#include "pentlab/rational.hpp"

#include "pentlab/error.hpp"

#include <cctype>

namespace pentlab {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? Integer(-p) : p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Rational mean(const Vec& values)
{
    if (values.empty())
        throw Error(ErrorKind::InvalidArgument, "mean of empty sequence");
    Rational s = 0;
    for (const auto& v : values)
        s += v;
    return Rational(s / static_cast<long>(values.size()));
}

}  // namespace pentlab

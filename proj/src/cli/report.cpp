#include "report.hpp"

#include <cstdio>
#include <cstdlib>

namespace vbell::cli
{
std::string format_number(double value, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    return buf;
}

Json rounded(double value, int precision)
{
    return std::strtod(format_number(value, precision).c_str(), nullptr);
}

Json to_json(Direction const& d, int precision)
{
    return {{"theta", rounded(d.theta(), precision)},
            {"phi", rounded(d.phi(), precision)}};
}

Json to_json(CenterOfMassState const& s, int precision)
{
    return {{"c", rounded(s.c, precision)},
            {"x", rounded(s.x, precision)},
            {"n", to_json(s.n, precision)}};
}

Json to_json(MeasurementSettings const& s, int precision)
{
    Json j{{"a", to_json(s.a, precision)}, {"b", to_json(s.b, precision)}};
    if (s.c)
        j["c"] = to_json(*s.c, precision);
    if (s.d)
        j["d"] = to_json(*s.d, precision);
    return j;
}

std::string outcome_label(Outcome o)
{
    switch (o)
    {
        case Outcome::plus:
            return "+1";
        case Outcome::zero:
            return "0";
        case Outcome::minus:
            return "-1";
    }
    return "?";
}

Json to_json(ProbabilityTable const& t, int precision)
{
    Json p = Json::object();
    for (Outcome a : all_outcomes)
    {
        Json row = Json::object();
        for (Outcome b : all_outcomes)
            row[outcome_label(b)] = rounded(t(a, b), precision);
        p[outcome_label(a)] = row;
    }
    return p;
}

std::string key_value_csv(std::vector<std::pair<std::string, std::string>> const& rows)
{
    std::string s = "key,value\n";
    for (auto const& [k, v] : rows)
        s += k + "," + v + "\n";
    return s;
}

}  // namespace vbell::cli

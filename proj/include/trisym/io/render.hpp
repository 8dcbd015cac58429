#ifndef TRISYM_IO_RENDER_HPP
#define TRISYM_IO_RENDER_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "trisym/coeffs/isotropy.hpp"
#include "trisym/einstein/einstein.hpp"

namespace trisym::io {

// insertion-ordered keys keep the output byte-stable
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Rational& r);                  // "p/q"
Json to_json(const QuadraticSurd& s);             // {p, q, D}
Json to_json(const IsolatingInterval& iv);        // {lo, hi, poly}
Json to_json(const Coordinate& c);
Json to_json(const Polynomial& p);                // descending "p/q" list
Json to_json(const EinsteinSolution& s, int digits);

Json case_json(const SpaceCase& c);
Json isotropy_json(const SpaceCase& c, const IsotropyData& iso, const GammaAnchor& anchor);

Json envelope(const std::string& command, Json payload, const std::vector<std::string>& warnings);
std::string dump(const Json& j);

using Rows = std::vector<std::vector<std::string>>;
std::string render_table(const std::vector<std::string>& header, const Rows& rows);
std::string render_csv(const std::vector<std::string>& header, const Rows& rows);

std::string params_string(const SpaceCase& c);  // "l=4 i=1 j=2"
std::string triple_string(const std::array<Rational, 3>& v);
std::string dims_string(const std::array<long, 3>& v);

}  // namespace trisym::io

#endif  // TRISYM_IO_RENDER_HPP

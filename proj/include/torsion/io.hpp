#ifndef TORSION_IO_HPP
#define TORSION_IO_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "torsion/asymptotics.hpp"
#include "torsion/exponents.hpp"
#include "torsion/kappa.hpp"

namespace torsion::io {

using Json = nlohmann::ordered_json;

// ---- CSV sample streams (header "r,value") ----

std::vector<Sample> read_samples_csv(std::istream& in);
std::vector<Sample> read_samples_csv_file(const std::string& path);
void write_samples_csv(std::ostream& out, const std::vector<Sample>& samples);

// ---- problem-file parsing ----

Json load_json_file(const std::string& path);

Rat parse_rat(const Json& j);
Germ parse_germ(const Json& j);
std::vector<Germ> parse_germ_list(const Json& j);
MonodromySpec parse_monodromy(const Json& j);
ColengthSpec parse_colengths(const Json& j);
RingCtx parse_ring(const Json& j);
GradedElt parse_elt(const RingCtx& ctx, const Json& j);
BundleData parse_bundle(const RingCtx& ctx, const Json& j);
IntersectionData parse_intersections(const RingCtx& ctx, const Json& j);
QuadraticRank2Config parse_quadratic(const Json& j);

// ---- report fields ----

// 12-digit decimal rendering used by every report.
std::string decimal(double v);

// {"exact": "p/q", "decimal": "...", "source": ...}
Json rat_field(const Rat& v, const std::string& source);
Json num_field(double v, const std::string& source);

}  // namespace torsion::io

#endif

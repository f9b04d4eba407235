#pragma once

#include <json.hpp>

#include "liaison/exact/oracle.hpp"
#include "liaison/linkage.hpp"

// JSON documents for the CLI and for machine consumers.  All emission goes
// through canonical_dump so that parse -> dump round-trips byte-identically.

namespace liaison {

using Json = nlohmann::ordered_json;

std::string canonical_dump(const Json& j);

// Rationals: integers emit as JSON numbers, everything else as "num/den".
Json rational_to_json(const mpq_class& q);

Json genus_report_json(const GenusParameters& p);
Json scroll_json(const Scroll& x);
Json divisor_class_json(const DivisorClass& cls);
Json example1_report_json(const Example1Report& rep);
Json example2_report_json(const Example2Report& rep);

Json point_set_json(const exact::PointSet& z);
exact::PointSet point_set_from_json(const Json& j, int ambient_dim);

Json instance_json(const exact::LinkageInstance& inst);
Json verification_report_json(const exact::VerificationReport& rep);

}  // namespace liaison

#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"
#include "tsurf/flow.hpp"
#include "tsurf/group.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/unfold.hpp"

namespace tsurf {

// All rationals serialize as canonical "p/q" strings ("p" when q = 1), so
// output is exact and byte-stable across runs.
nlohmann::json rational_json(const Rational& r);
nlohmann::json vec_json(const Vec2& v);
nlohmann::json vertex_ref_json(const VertexRef& v);
nlohmann::json edge_label_json(const EdgeLabel& e);  // boundary edges report component "glued"
nlohmann::json code_json(const Code& code);

nlohmann::json surface_dump_json(const Surface& h, long window);
nlohmann::json cylinders_json(const Surface& h, DirectionKind direction, long count);

nlohmann::json trace_json(const Surface& h, const SurfacePoint& start, const Vec2& direction,
                          const TraceResult& result);
nlohmann::json separatrix_json(const Surface& h, const VertexRef& origin, const Vec2& direction,
                               const TraceResult& result);
nlohmann::json saddle_connections_json(const Surface& h, const Vec2& direction,
                                       const std::vector<SaddleConnection>& conns);

nlohmann::json classify_json(const mpz_class& p, const mpz_class& q);
nlohmann::json reduce_json(const mpz_class& p, const mpz_class& q);

nlohmann::json cone_json(const FeasibilityCone& cone);
nlohmann::json cross_surface_json(const CrossSurfaceReport& rep);

// cross may be null when the comparison never started (no common sector).
nlohmann::json compare_json(const CompareReport& rep, const CrossSurfaceReport* cross);

}  // namespace tsurf

#pragma once

#include <nlohmann/json.hpp>

#include "orientlat/chromatic.hpp"
#include "orientlat/firing_poset.hpp"
#include "orientlat/geometry.hpp"
#include "orientlat/verify.hpp"

namespace orientlat {

using Json = nlohmann::ordered_json;

// Writers. Key order is fixed so that re-serialising parsed output is
// byte-identical.
Json serialize(const Graph& g);                 // {"n", "edges": [[lo,hi],...]}
Json serialize(const Orientation& o);           // {"edges": [[tail,head],...]}
Json serialize(const FiringSequence& f);        // {"start", "fires"}
Json serialize(const Point& x);                 // {"coords": ["p/q",...]}
Json serialize(const Graph& g, const RegionSignature& s);  // {"i-j": k, ...}
Json serialize(const CubeAnchor& a);            // [a_0, ..., a_n]
Json serialize(const Poset& p);                 // {"elements", "covers"}
Json serialize(const std::vector<Component>& cs);
Json serialize(const std::vector<ZigzagStep>& steps);
Json serialize(const ChromaticPolynomial& p);   // [c_0, c_1, ...]
Json serialize(const LatticeReport& r);
Json serialize(const PropertyTally& t);

// Readers throw InputError on schema violations.
Graph parse_graph(const Json& j);
Orientation parse_orientation(const Graph& g, const Json& j);
FiringSequence parse_firing_sequence(const Graph& g, const Json& j);
Point parse_point(const Json& j);

}  // namespace orientlat

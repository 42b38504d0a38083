#pragma once

#include "fanogap/rational.hpp"

#include <json.hpp>

#include <istream>
#include <string>
#include <vector>

namespace fanogap {

using RVec = std::vector<Rational>;
using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;

/// Facet inequality <x, normal> >= -offset.
struct Facet {
    IVec normal;
    Rational offset;
};

struct HalfspaceRep {
    int n = 0;
    std::vector<Facet> facets;

    /// Every offset is 1 and every normal is primitive.
    bool is_reflexive() const;
};

struct PolytopeGeometry {
    std::vector<RVec> vertices;
    Rational volume;
    RVec barycenter;
};

struct DeltaResult {
    Rational delta;
    std::size_t facet_index = 0;
    IVec minimizer;
};

/// Exhaustive solve over all n-subsets of facets. Throws
/// std::runtime_error("unbounded-or-degenerate") with fewer than n+1 vertices.
std::vector<RVec> enumerate_vertices(const HalfspaceRep& H);

/// Exact volume and barycenter: an interior point is coned over the facets,
/// and faces are triangulated recursively by pulling a vertex.
PolytopeGeometry volume_barycenter(const HalfspaceRep& H);

/// min over facets of 1 / (<Bc, u> + 1). Requires a reflexive H.
DeltaResult delta_toric(const HalfspaceRep& H);

/// "Pn", "P1xPn-1", "BlPn-2Pn", "scaled-simplex".
HalfspaceRep builtin(const std::string& name, int n);
std::vector<std::string> builtin_names();

/// Line format: "H n m", then m lines of n integers and one rational offset.
HalfspaceRep parse_halfspace(std::istream& in);

/// Image under x -> M x for an integer matrix with det = +-1.
HalfspaceRep transform(const HalfspaceRep& H, const IMat& M);
/// Inverse of an integer matrix with det = +-1. Throws otherwise.
IMat unimodular_inverse(const IMat& M);

Rational determinant(std::vector<RVec> rows);

nlohmann::json to_json(const PolytopeGeometry& g);

}  // namespace fanogap

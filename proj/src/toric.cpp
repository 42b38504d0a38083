#include "fanogap/toric.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace fanogap {

namespace {

Rational dot(const RVec& x, const IVec& u)
{
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * Rational(u[i]);
    }
    return s;
}

// Solves A x = b exactly; empty result when A is singular.
std::optional<RVec> solve(std::vector<RVec> A, RVec b)
{
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = A[col][col].inverse();
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].is_zero()) continue;
            const Rational f = A[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) {
                A[row][k] -= f * A[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    RVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[i] / A[i][i];
    }
    return x;
}

std::size_t rank(std::vector<RVec> rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t k = col; k < cols; ++k) {
                rows[i][k] -= f * rows[r][k];
            }
        }
        ++r;
    }
    return r;
}

using Face = std::vector<std::size_t>;  // sorted vertex indices

std::size_t affine_dim(const std::vector<RVec>& verts, const Face& face)
{
    if (face.size() <= 1) {
        return 0;
    }
    std::vector<RVec> diffs;
    for (std::size_t i = 1; i < face.size(); ++i) {
        RVec d = verts[face[i]];
        for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] -= verts[face[0]][k];
        }
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

// Facets of `face` (dimension k) as vertex subsets cut out by polytope facets.
std::vector<Face> subfacets(const std::vector<RVec>& verts, const std::vector<Face>& tight, const Face& face,
                            std::size_t k)
{
    std::vector<Face> out;
    for (const Face& t : tight) {
        Face g;
        std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(g));
        if (g.size() < k || g == face) continue;
        if (affine_dim(verts, g) + 1 != k) continue;
        if (std::find(out.begin(), out.end(), g) == out.end()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

// Pulling triangulation of a k-dimensional face into k-simplices (vertex index lists).
void triangulate(const std::vector<RVec>& verts, const std::vector<Face>& tight, const Face& face, std::size_t k,
                 std::vector<Face>& out)
{
    if (k == 0) {
        out.push_back({face.front()});
        return;
    }
    const std::size_t apex = face.front();
    for (const Face& g : subfacets(verts, tight, face, k)) {
        if (std::binary_search(g.begin(), g.end(), apex)) continue;
        std::vector<Face> sub;
        triangulate(verts, tight, g, k - 1, sub);
        for (Face& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

Integer gcd_all(const IVec& v)
{
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

}  // namespace

bool HalfspaceRep::is_reflexive() const
{
    return std::all_of(facets.begin(), facets.end(),
                       [](const Facet& f) { return f.offset == Rational(1) && gcd_all(f.normal) == 1; });
}

Rational determinant(std::vector<RVec> rows)
{
    const std::size_t n = rows.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && rows[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return Rational(0);
        }
        if (piv != col) {
            std::swap(rows[piv], rows[col]);
            det = -det;
        }
        det *= rows[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (rows[i][col].is_zero()) continue;
            const Rational f = rows[i][col] / rows[col][col];
            for (std::size_t k = col; k < n; ++k) {
                rows[i][k] -= f * rows[col][k];
            }
        }
    }
    return det;
}

std::vector<RVec> enumerate_vertices(const HalfspaceRep& H)
{
    const auto n = static_cast<std::size_t>(H.n);
    const std::size_t m = H.facets.size();
    if (n == 0 || m < n + 1) {
        throw std::runtime_error("unbounded-or-degenerate: too few facets");
    }
    for (const auto& f : H.facets) {
        if (f.normal.size() != n) {
            throw std::invalid_argument("enumerate_vertices: normal of wrong dimension");
        }
    }
    std::vector<RVec> out;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
    do {
        std::vector<RVec> A;
        RVec b;
        for (std::size_t i = 0; i < m; ++i) {
            if (!pick[i]) continue;
            RVec row;
            for (const auto& u : H.facets[i].normal) {
                row.emplace_back(u);
            }
            A.push_back(std::move(row));
            b.push_back(-H.facets[i].offset);
        }
        const auto x = solve(std::move(A), std::move(b));
        if (!x) continue;
        const bool feasible = std::all_of(H.facets.begin(), H.facets.end(),
                                          [&x](const Facet& f) { return dot(*x, f.normal) >= -f.offset; });
        if (feasible && std::find(out.begin(), out.end(), *x) == out.end()) {
            out.push_back(*x);
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (out.size() < n + 1) {
        throw std::runtime_error("unbounded-or-degenerate: " + std::to_string(out.size()) + " vertices");
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolytopeGeometry volume_barycenter(const HalfspaceRep& H)
{
    PolytopeGeometry g;
    g.vertices = enumerate_vertices(H);
    const auto n = static_cast<std::size_t>(H.n);
    const auto& V = g.vertices;

    std::vector<Face> tight;
    for (const auto& f : H.facets) {
        Face t;
        for (std::size_t i = 0; i < V.size(); ++i) {
            if (dot(V[i], f.normal) == -f.offset) {
                t.push_back(i);
            }
        }
        tight.push_back(std::move(t));
    }
    Face all(V.size());
    for (std::size_t i = 0; i < V.size(); ++i) {
        all[i] = i;
    }
    if (affine_dim(V, all) != n) {
        throw std::runtime_error("unbounded-or-degenerate: polytope not full-dimensional");
    }

    // Interior point: origin when strictly feasible, else the vertex average.
    RVec apex(n);
    const bool origin_inside = std::all_of(H.facets.begin(), H.facets.end(),
                                           [](const Facet& f) { return f.offset.sign() > 0; });
    if (!origin_inside) {
        for (const auto& v : V) {
            for (std::size_t k = 0; k < n; ++k) {
                apex[k] += v[k];
            }
        }
        for (auto& a : apex) {
            a /= Rational(static_cast<long>(V.size()));
        }
    }

    const Rational nfact(factorial(n));
    g.barycenter.assign(n, Rational(0));
    for (const Face& facet : subfacets(V, tight, all, n)) {
        std::vector<Face> simplices;
        triangulate(V, tight, facet, n - 1, simplices);
        for (const Face& s : simplices) {
            std::vector<RVec> rows;
            for (std::size_t idx : s) {
                RVec r = V[idx];
                for (std::size_t k = 0; k < n; ++k) {
                    r[k] -= apex[k];
                }
                rows.push_back(std::move(r));
            }
            const Rational vol = determinant(rows).abs() / nfact;
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = apex[k];
                for (std::size_t idx : s) {
                    c += V[idx][k];
                }
                g.barycenter[k] += vol * c / Rational(static_cast<long>(n + 1));
            }
            g.volume += vol;
        }
    }
    if (g.volume.sign() <= 0) {
        throw std::runtime_error("unbounded-or-degenerate: zero volume");
    }
    for (auto& b : g.barycenter) {
        b /= g.volume;
    }
    return g;
}

DeltaResult delta_toric(const HalfspaceRep& H)
{
    if (!H.is_reflexive()) {
        throw std::invalid_argument("delta_toric: polytope is not reflexive (offsets 1, primitive normals)");
    }
    const PolytopeGeometry g = volume_barycenter(H);
    DeltaResult best;
    bool first = true;
    for (std::size_t i = 0; i < H.facets.size(); ++i) {
        const Rational val = (dot(g.barycenter, H.facets[i].normal) + Rational(1)).inverse();
        if (first || val < best.delta) {
            best = {val, i, H.facets[i].normal};
            first = false;
        }
    }
    return best;
}

std::vector<std::string> builtin_names() { return {"Pn", "P1xPn-1", "BlPn-2Pn", "scaled-simplex"}; }

HalfspaceRep builtin(const std::string& name, int n)
{
    if (n < 2) {
        throw std::invalid_argument("builtin: n must be >= 2");
    }
    const auto un = static_cast<std::size_t>(n);
    const auto unit = [un](std::size_t i, long s) {
        IVec v(un, Integer(0));
        v[i] = s;
        return v;
    };
    HalfspaceRep H;
    H.n = n;
    if (name == "Pn" || name == "BlPn-2Pn") {
        for (std::size_t i = 0; i < un; ++i) {
            H.facets.push_back({unit(i, 1), Rational(1)});
        }
        H.facets.push_back({IVec(un, Integer(-1)), Rational(1)});
        if (name == "BlPn-2Pn") {
            IVec f(un, Integer(0));
            f[0] = 1;
            f[1] = 1;
            H.facets.push_back({f, Rational(1)});
        }
        return H;
    }
    if (name == "P1xPn-1") {
        H.facets.push_back({unit(0, 1), Rational(1)});
        H.facets.push_back({unit(0, -1), Rational(1)});
        IVec s(un, Integer(-1));
        s[0] = 0;
        for (std::size_t i = 1; i < un; ++i) {
            H.facets.push_back({unit(i, 1), Rational(1)});
        }
        H.facets.push_back({s, Rational(1)});
        return H;
    }
    if (name == "scaled-simplex") {
        for (std::size_t i = 0; i < un; ++i) {
            H.facets.push_back({unit(i, 1), Rational(0)});
        }
        H.facets.push_back({IVec(un, Integer(-1)), Rational(n + 1)});
        return H;
    }
    throw std::invalid_argument("builtin: unknown polytope '" + name + "'");
}

HalfspaceRep parse_halfspace(std::istream& in)
{
    std::string tag;
    int n = 0;
    int m = 0;
    if (!(in >> tag >> n >> m) || tag != "H" || n < 1 || m < 1) {
        throw std::invalid_argument("parse_halfspace: expected header 'H n m'");
    }
    HalfspaceRep H;
    H.n = n;
    for (int i = 0; i < m; ++i) {
        Facet f;
        for (int k = 0; k < n; ++k) {
            std::string tok;
            if (!(in >> tok)) {
                throw std::invalid_argument("parse_halfspace: truncated facet line " + std::to_string(i + 1));
            }
            const Rational q = Rational::parse(tok);
            if (!q.is_integer()) {
                throw std::invalid_argument("parse_halfspace: normal entries must be integers");
            }
            f.normal.push_back(q.num());
        }
        std::string off;
        if (!(in >> off)) {
            throw std::invalid_argument("parse_halfspace: missing offset on facet line " + std::to_string(i + 1));
        }
        f.offset = Rational::parse(off);
        H.facets.push_back(std::move(f));
    }
    return H;
}

IMat unimodular_inverse(const IMat& M)
{
    const std::size_t n = M.size();
    std::vector<RVec> A(n, RVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) {
            throw std::invalid_argument("unimodular_inverse: matrix not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            A[i][j] = Rational(M[i][j]);
        }
        A[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            throw std::invalid_argument("unimodular_inverse: singular matrix");
        }
        std::swap(A[piv], A[col]);
        const Rational inv = A[col][col].inverse();
        for (auto& x : A[col]) {
            x *= inv;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].is_zero()) continue;
            const Rational f = A[row][col];
            for (std::size_t k = 0; k < 2 * n; ++k) {
                A[row][k] -= f * A[col][k];
            }
        }
    }
    IMat out(n, IVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!A[i][n + j].is_integer()) {
                throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
            }
            out[i][j] = A[i][n + j].num();
        }
    }
    return out;
}

HalfspaceRep transform(const HalfspaceRep& H, const IMat& M)
{
    // <x, u> = <M^{-1} y, u> = <y, M^{-T} u>
    const IMat inv = unimodular_inverse(M);
    const auto n = static_cast<std::size_t>(H.n);
    HalfspaceRep out;
    out.n = H.n;
    for (const auto& f : H.facets) {
        IVec u(n, Integer(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                u[i] += inv[k][i] * f.normal[k];
            }
        }
        out.facets.push_back({u, f.offset});
    }
    return out;
}

nlohmann::json to_json(const PolytopeGeometry& g)
{
    const auto vec = [](const RVec& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : v) {
            a.push_back(x.str());
        }
        return a;
    };
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        verts.push_back(vec(v));
    }
    return {{"vertices", verts}, {"volume", g.volume.str()}, {"barycenter", vec(g.barycenter)}};
}

}  // namespace fanogap

#include "conf2/simplicial.hpp"
#include "conf2/linalg.hpp"

#include "builtin_triangulations.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace conf2::oracle {

namespace {

std::string simplex_label(const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

bool disjoint(const Simplex& a, const Simplex& b)
{
    // Both sorted; linear merge.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

std::vector<Simplex> codim_one_faces(const Simplex& s)
{
    std::vector<Simplex> faces;
    if (s.size() <= 1) return faces;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) f.push_back(s[i]);
        faces.push_back(std::move(f));
    }
    return faces;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets))
{
    std::set<Simplex> seen;
    for (auto& f : facets_) {
        if (f.empty()) throw InputError("empty facet");
        if (f.size() > 3) throw InputError("facets of dimension above 2 are not supported");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("facet " + simplex_label(f) + " repeats a vertex");
        if (f.back() >= vertex_count_) throw InputError("facet " + simplex_label(f) + " uses a vertex out of range");
        if (!seen.insert(f).second) throw InputError("duplicate facet " + simplex_label(f));
    }

    std::size_t top = 0;
    for (const auto& f : facets_) top = std::max(top, f.size() - 1);
    std::vector<std::set<Simplex>> by_dim(top + 1);
    for (Vertex v = 0; v < vertex_count_; ++v) by_dim[0].insert(Simplex{v});
    for (const auto& f : facets_) {
        // Every nonempty subset of the facet.
        const std::size_t n = f.size();
        for (unsigned mask = 1; mask < (1U << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1U << i)) s.push_back(f[i]);
            by_dim[s.size() - 1].insert(std::move(s));
        }
    }
    if (vertex_count_ == 0) by_dim.clear();
    for (auto& layer : by_dim) {
        std::vector<Simplex> list(layer.begin(), layer.end());
        for (std::size_t i = 0; i < list.size(); ++i) index_.emplace(list[i], i);
        simplices_.push_back(std::move(list));
    }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> none;
    if (d < 0 || d > dimension()) return none;
    return simplices_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& layer : simplices_) f.push_back(layer.size());
    return f;
}

long SimplicialComplex::euler() const
{
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simplices(d).size());
    return chi;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    const auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

f2::F2Matrix SimplicialComplex::boundary(int d) const
{
    const auto& cols = simplices(d);
    const auto& rows = simplices(d - 1);
    f2::F2Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& face : codim_one_faces(cols[c])) m.set(*index_of(face), c);
    return m;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k)
{
    std::vector<std::size_t> ranks(static_cast<std::size_t>(k.dimension() + 2), 0);
    for (int d = 1; d <= k.dimension(); ++d) ranks[static_cast<std::size_t>(d)] = f2::rank(k.boundary(d));
    std::vector<std::size_t> betti;
    for (int d = 0; d <= k.dimension(); ++d)
        betti.push_back(k.simplices(d).size() - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)]);
    return betti;
}

SurfaceValidation validate_surface(const SimplicialComplex& k)
{
    SurfaceValidation v;
    v.euler = k.euler();

    // Connectivity through edges (vertex set is all of 0..n-1).
    std::vector<std::size_t> parent(k.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : k.simplices(1)) parent[root(e[0])] = root(e[1]);
    std::size_t components = 0;
    for (std::size_t x = 0; x < k.vertex_count(); ++x)
        if (root(x) == x) ++components;
    v.connected = components == 1;

    bool closed = k.dimension() == 2 &&
                  std::all_of(k.facets().begin(), k.facets().end(), [](const Simplex& f) { return f.size() == 3; });
    if (closed) {
        std::map<Simplex, int> edge_use;
        std::vector<std::vector<std::pair<Vertex, Vertex>>> link(k.vertex_count());
        for (const auto& f : k.facets()) {
            for (const auto& e : codim_one_faces(f)) ++edge_use[e];
            link[f[0]].emplace_back(f[1], f[2]);
            link[f[1]].emplace_back(f[0], f[2]);
            link[f[2]].emplace_back(f[0], f[1]);
        }
        closed = std::all_of(edge_use.begin(), edge_use.end(), [](const auto& kv) { return kv.second == 2; });

        // Each vertex link must be one cycle: all link vertices of degree 2, and connected.
        for (std::size_t x = 0; closed && x < k.vertex_count(); ++x) {
            const auto& edges = link[x];
            if (edges.empty()) {
                closed = false;
                break;
            }
            std::map<Vertex, std::vector<Vertex>> adj;
            for (const auto& [a, b] : edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            if (std::any_of(adj.begin(), adj.end(), [](const auto& kv) { return kv.second.size() != 2; })) {
                closed = false;
                break;
            }
            std::set<Vertex> visited;
            std::vector<Vertex> stack{adj.begin()->first};
            while (!stack.empty()) {
                const Vertex y = stack.back();
                stack.pop_back();
                if (!visited.insert(y).second) continue;
                for (Vertex z : adj[y]) stack.push_back(z);
            }
            closed = visited.size() == adj.size();
        }
    }
    v.closed = closed;

    const auto b = betti_numbers(k);
    for (std::size_t d = 0; d < 3 && d < b.size(); ++d) v.betti[d] = b[d];
    return v;
}

SimplicialComplex read_triangulation(std::istream& in)
{
    std::optional<std::size_t> vertices;
    std::vector<Simplex> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (key == "vertices") {
            long n = -1;
            if (vertices || !(ls >> n) || n < 0) throw InputError(where + "bad or repeated 'vertices' line");
            vertices = static_cast<std::size_t>(n);
        } else if (key == "f") {
            if (!vertices) throw InputError(where + "facet before 'vertices' line");
            long a = -1, b = -1, c = -1;
            if (!(ls >> a >> b >> c) || a < 0 || b < 0 || c < 0) throw InputError(where + "expected 'f i j k'");
            facets.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
        } else {
            throw InputError(where + "unknown record '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) throw InputError(where + "trailing text '" + extra + "'");
    }
    if (!vertices) throw InputError("missing 'vertices' line");
    return SimplicialComplex(*vertices, std::move(facets));
}

SimplicialComplex read_triangulation(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open triangulation file " + path.string());
    return read_triangulation(in);
}

void write_triangulation(std::ostream& out, const SimplicialComplex& k)
{
    out << "vertices " << k.vertex_count() << '\n';
    for (const auto& f : k.facets()) {
        if (f.size() != 3) throw InputError("write_triangulation: only triangle facets can be written");
        out << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    }
}

namespace {

SimplicialComplex parse_builtin(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_triangulation(in);
}

void require_surface(const SimplicialComplex& k, std::string_view what)
{
    const auto v = validate_surface(k);
    if (!v.closed || !v.connected) throw ValidationError(std::string(what) + " is not a connected closed surface");
}

} // namespace

SimplicialComplex builtin_triangulation(const SurfaceKind& kind)
{
    switch (kind.type()) {
    case SurfaceKind::Type::Sphere: return parse_builtin(builtin::kSphere);
    case SurfaceKind::Type::Orientable: {
        const SimplicialComplex torus = parse_builtin(builtin::kTorus);
        SimplicialComplex out = torus;
        for (int i = 1; i < kind.count(); ++i) out = connected_sum(out, torus);
        return out;
    }
    case SurfaceKind::Type::Nonorientable: {
        const SimplicialComplex rp2 = parse_builtin(builtin::kProjectivePlane);
        SimplicialComplex out = rp2;
        for (int i = 1; i < kind.count(); ++i) out = connected_sum(out, rp2);
        return out;
    }
    }
    throw std::logic_error("builtin_triangulation: unknown kind");
}

namespace {

SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b)
{
    // Remove a's last facet and b's first facet; identify them vertex by vertex in sorted order.
    const Simplex& fa = a.facets().back();
    const Simplex& fb = b.facets().front();
    std::vector<Vertex> relabel(b.vertex_count());
    Vertex next = static_cast<Vertex>(a.vertex_count());
    for (Vertex v = 0; v < b.vertex_count(); ++v) {
        const auto it = std::find(fb.begin(), fb.end(), v);
        relabel[v] = it != fb.end() ? fa[static_cast<std::size_t>(it - fb.begin())] : next++;
    }
    std::vector<Simplex> facets(a.facets().begin(), a.facets().end() - 1);
    for (auto it = b.facets().begin() + 1; it != b.facets().end(); ++it) {
        Simplex f;
        for (Vertex v : *it) f.push_back(relabel[v]);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(a.vertex_count() + b.vertex_count() - 3, std::move(facets));
}

bool glued_ok(const SimplicialComplex& a, const SimplicialComplex& b, const std::optional<SimplicialComplex>& out)
{
    if (!out) return false;
    const auto v = validate_surface(*out);
    return v.closed && v.connected && v.euler == a.euler() + b.euler() - 2;
}

} // namespace

SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b)
{
    require_surface(a, "connected_sum: first summand");
    require_surface(b, "connected_sum: second summand");

    auto attempt = [](const SimplicialComplex& x, const SimplicialComplex& y) -> std::optional<SimplicialComplex> {
        try {
            return glue(x, y);
        } catch (const InputError&) {
            return std::nullopt; // duplicate facets after identification
        }
    };

    if (auto out = attempt(a, b); glued_ok(a, b, out)) return *out;
    const SimplicialComplex sa = barycentric_subdivide(a);
    const SimplicialComplex sb = barycentric_subdivide(b);
    if (auto out = attempt(sa, sb); glued_ok(sa, sb, out)) return *out;
    throw ValidationError("connected_sum: gluing failed even after subdivision");
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& k)
{
    // New vertices: one per simplex, numbered dimension by dimension.
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
        offset.push_back(total);
        total += k.simplices(d).size();
    }
    auto id = [&](const Simplex& s) {
        return static_cast<Vertex>(offset[s.size() - 1] + *k.index_of(s));
    };

    // One new facet per maximal flag below each old facet.
    std::vector<Simplex> facets;
    std::function<void(const Simplex&, Simplex&)> flags = [&](const Simplex& s, Simplex& chain) {
        chain.push_back(id(s));
        if (s.size() == 1)
            facets.push_back(chain);
        else
            for (const auto& f : codim_one_faces(s)) flags(f, chain);
        chain.pop_back();
    };
    for (const auto& f : k.facets()) {
        Simplex chain;
        flags(f, chain);
    }
    return SimplicialComplex(total, std::move(facets));
}

std::size_t CellComplex::count(int d) const
{
    if (d < 0 || d > dimension()) return 0;
    return cells[static_cast<std::size_t>(d)].size();
}

std::vector<std::size_t> CellComplex::counts() const
{
    std::vector<std::size_t> out;
    for (const auto& layer : cells) out.push_back(layer.size());
    return out;
}

long CellComplex::euler() const
{
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
    return chi;
}

f2::F2Matrix CellComplex::coboundary(int d) const
{
    if (d + 1 <= dimension() && d >= 0) return boundary[static_cast<std::size_t>(d + 1)].transpose();
    return f2::F2Matrix(count(d + 1), count(d));
}

f2::F2Matrix CellComplex::involution_on_cochains(int d) const
{
    if (!involution) throw std::logic_error("CellComplex: no involution");
    // (φ∘σ)(c) = φ(σc): row c has a single 1 in column σ(c).
    const auto& perm = (*involution)[static_cast<std::size_t>(d)];
    f2::F2Matrix m(perm.size(), perm.size());
    for (std::size_t c = 0; c < perm.size(); ++c) m.set(c, perm[c]);
    return m;
}

bool CellComplex::boundary_squares_to_zero() const
{
    for (int d = 2; d <= dimension(); ++d)
        if (!(boundary[static_cast<std::size_t>(d - 1)] * boundary[static_cast<std::size_t>(d)]).is_zero()) return false;
    return true;
}

bool CellComplex::involution_commutes() const
{
    if (!involution) return true;
    for (int d = 1; d <= dimension(); ++d) {
        const auto bt = boundary[static_cast<std::size_t>(d)].transpose();
        const auto& lo = (*involution)[static_cast<std::size_t>(d - 1)];
        const auto& hi = (*involution)[static_cast<std::size_t>(d)];
        // ∂(σc) must equal σ(∂c) for every cell c.
        for (std::size_t c = 0; c < count(d); ++c) {
            const auto faces = bt.row(c).support();
            const auto image_faces = bt.row(hi[c]).support();
            std::vector<std::size_t> moved;
            for (std::size_t f : faces) moved.push_back(lo[f]);
            std::sort(moved.begin(), moved.end());
            if (moved != image_faces) return false;
        }
    }
    return true;
}

bool CellComplex::involution_is_free() const
{
    if (!involution) return false;
    for (const auto& perm : *involution)
        for (std::size_t c = 0; c < perm.size(); ++c)
            if (perm[c] == c || perm[perm[c]] != c) return false;
    return true;
}

CellComplex deleted_product(const SimplicialComplex& k)
{
    const int top = 2 * k.dimension();
    CellComplex out;
    if (k.dimension() < 0) return out;
    out.cells.resize(static_cast<std::size_t>(top + 1));
    out.involution.emplace(static_cast<std::size_t>(top + 1));

    // Global simplex ids so a pair can be hashed as one integer.
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
        offset.push_back(total);
        total += k.simplices(d).size();
    }
    auto gid = [&](const Simplex& s) { return offset[s.size() - 1] + *k.index_of(s); };
    auto key = [&](std::size_t a, std::size_t b) { return a * total + b; };

    std::vector<std::vector<std::pair<const Simplex*, const Simplex*>>> pairs(static_cast<std::size_t>(top + 1));
    std::unordered_map<std::size_t, std::size_t> index;
    for (int d = 0; d <= top; ++d)
        for (int ds = std::max(0, d - k.dimension()); ds <= std::min(d, k.dimension()); ++ds)
            for (const auto& s : k.simplices(ds))
                for (const auto& t : k.simplices(d - ds)) {
                    if (!disjoint(s, t)) continue;
                    index.emplace(key(gid(s), gid(t)), pairs[static_cast<std::size_t>(d)].size());
                    pairs[static_cast<std::size_t>(d)].emplace_back(&s, &t);
                    out.cells[static_cast<std::size_t>(d)].push_back(simplex_label(s) + "x" + simplex_label(t));
                }

    // Trim empty top dimensions (e.g. the deleted product of an edge is 0-dimensional).
    while (out.cells.size() > 1 && out.cells.back().empty()) {
        out.cells.pop_back();
        pairs.pop_back();
        out.involution->pop_back();
    }

    out.boundary.emplace_back(0, out.count(0));
    for (int d = 1; d <= out.dimension(); ++d) {
        f2::F2Matrix bd(out.count(d - 1), out.count(d));
        for (std::size_t c = 0; c < pairs[static_cast<std::size_t>(d)].size(); ++c) {
            const auto [s, t] = pairs[static_cast<std::size_t>(d)][c];
            for (const auto& f : codim_one_faces(*s)) bd.flip(index.at(key(gid(f), gid(*t))), c);
            for (const auto& f : codim_one_faces(*t)) bd.flip(index.at(key(gid(*s), gid(f))), c);
        }
        out.boundary.push_back(std::move(bd));
    }
    for (int d = 0; d <= out.dimension(); ++d) {
        auto& perm = (*out.involution)[static_cast<std::size_t>(d)];
        for (const auto& [s, t] : pairs[static_cast<std::size_t>(d)]) perm.push_back(index.at(key(gid(*t), gid(*s))));
    }

    if (!out.boundary_squares_to_zero()) throw ValidationError("deleted_product: boundary does not square to zero");
    return out;
}

long CohomologyResult::euler() const
{
    long chi = 0;
    for (std::size_t d = 0; d < dims.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(dims[d]);
    return chi;
}

CohomologyResult cohomology_f2(const CellComplex& c)
{
    CohomologyResult h;
    for (int d = 0; d <= c.dimension(); ++d) {
        h.groups.push_back(f2::CohomologyGroup::compute(c.coboundary(d - 1), c.coboundary(d)));
        h.dims.push_back(h.groups.back().dim());
    }
    return h;
}

std::vector<f2::F2Matrix> induced_involution(const CellComplex& c, const CohomologyResult& h)
{
    std::vector<f2::F2Matrix> out;
    for (int d = 0; d <= c.dimension(); ++d) {
        const auto& g = h.groups.at(static_cast<std::size_t>(d));
        out.push_back(g.induced_map(c.involution_on_cochains(d), g));
    }
    return out;
}

CellComplex quotient_complex(const CellComplex& c)
{
    if (!c.involution) throw ValidationError("quotient_complex: complex has no involution");
    CellComplex q;
    std::vector<std::vector<std::size_t>> orbit(c.cells.size());
    std::vector<std::vector<std::size_t>> rep(c.cells.size());
    for (int d = 0; d <= c.dimension(); ++d) {
        const auto& perm = (*c.involution)[static_cast<std::size_t>(d)];
        auto& ob = orbit[static_cast<std::size_t>(d)];
        ob.assign(perm.size(), static_cast<std::size_t>(-1));
        std::vector<std::string> labels;
        for (std::size_t x = 0; x < perm.size(); ++x) {
            if (perm[x] == x)
                throw ValidationError("quotient_complex: cell " + c.cells[static_cast<std::size_t>(d)][x] + " is fixed");
            if (ob[x] != static_cast<std::size_t>(-1)) continue;
            ob[x] = ob[perm[x]] = labels.size();
            rep[static_cast<std::size_t>(d)].push_back(x);
            labels.push_back("[" + c.cells[static_cast<std::size_t>(d)][x] + "]");
        }
        q.cells.push_back(std::move(labels));
    }
    q.boundary.emplace_back(0, q.count(0));
    for (int d = 1; d <= c.dimension(); ++d) {
        const auto bt = c.boundary[static_cast<std::size_t>(d)].transpose();
        f2::F2Matrix qb(q.count(d - 1), q.count(d));
        for (std::size_t o = 0; o < q.count(d); ++o)
            for (std::size_t f : bt.row(rep[static_cast<std::size_t>(d)][o]).support())
                qb.flip(orbit[static_cast<std::size_t>(d - 1)][f], o);
        q.boundary.push_back(std::move(qb));
    }
    return q;
}

} // namespace conf2::oracle

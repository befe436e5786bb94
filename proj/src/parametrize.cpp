#include "semid/parametrize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semid {

namespace {

std::string var_name(const char* prefix, int i, int j) {
    std::ostringstream s;
    s << prefix;
    if (i > 9 || j > 9)
        s << i << "_" << j;
    else
        s << i << j;
    return s.str();
}

void validate_graph(const MixedGraph& g) {
    if (g.m < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto [i, j] : g.directed)
        if (i < 1 || j > g.m || i >= j) throw std::invalid_argument("invalid directed edge");
    for (auto [i, j] : g.bidirected)
        if (i < 1 || j > g.m || i >= j) throw std::invalid_argument("invalid bidirected edge");
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix poly_identity(int m, int nvars) {
    PolyMatrix id(static_cast<std::size_t>(m),
                  std::vector<Polynomial>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            Polynomial::constant(nvars, Rat(1));
    return id;
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t n = a.size();
    PolyMatrix c(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial acc;
            for (std::size_t k = 0; k < n; ++k) acc = acc + a[i][k] * b[k][j];
            c[i][j] = std::move(acc);
        }
    return c;
}

PolyMatrix poly_add(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t n = a.size();
    PolyMatrix c(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = a[i][j] + b[i][j];
    return c;
}

PolyMatrix poly_transpose(const PolyMatrix& a) {
    std::size_t n = a.size();
    PolyMatrix c(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = a[j][i];
    return c;
}

std::size_t upper_index(int m, int i, int j) {
    // row-major upper triangle, 1-based vertices, i <= j
    return static_cast<std::size_t>((i - 1) * (m + 1) - (i - 1) * i / 2 + (j - i));
}

Rat det(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    Rat sign(1), d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = Rat(-sign);
        }
        d = Rat(d * a[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rat f(a[row][col] / a[col][col]);
            for (std::size_t k = col; k < n; ++k) a[row][k] = Rat(a[row][k] - f * a[col][k]);
        }
    }
    return Rat(sign * d);
}

}  // namespace

ParamRing ParamRing::for_graph(const MixedGraph& g) {
    validate_graph(g);
    ParamRing pr;
    pr.graph = g;
    std::sort(pr.graph.directed.begin(), pr.graph.directed.end());
    std::sort(pr.graph.bidirected.begin(), pr.graph.bidirected.end());

    for (auto [i, j] : pr.graph.directed) pr.ring.names.push_back(var_name("l", i, j));
    pr.n_lambda = static_cast<int>(pr.graph.directed.size());
    for (int i = 1; i <= g.m; ++i) pr.ring.names.push_back(var_name("w", i, i));
    for (auto [i, j] : pr.graph.bidirected) pr.ring.names.push_back(var_name("w", i, j));
    pr.n_omega = g.m + static_cast<int>(pr.graph.bidirected.size());
    pr.ring.names.push_back("q");
    for (int i = 1; i <= g.m; ++i)
        for (int j = i; j <= g.m; ++j) pr.ring.names.push_back(var_name("s", i, j));
    return pr;
}

VarId ParamRing::lambda_var(int i, int j) const {
    auto it = std::find(graph.directed.begin(), graph.directed.end(), std::make_pair(i, j));
    if (it == graph.directed.end()) throw std::invalid_argument("no such directed edge");
    return static_cast<VarId>(it - graph.directed.begin());
}

VarId ParamRing::omega_var(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == j) {
        if (i < 1 || i > graph.m) throw std::invalid_argument("vertex out of range");
        return n_lambda + (i - 1);
    }
    auto it = std::find(graph.bidirected.begin(), graph.bidirected.end(), std::make_pair(i, j));
    if (it == graph.bidirected.end()) throw std::invalid_argument("no such bidirected edge");
    return n_lambda + graph.m + static_cast<VarId>(it - graph.bidirected.begin());
}

VarId ParamRing::sigma_var(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > graph.m) throw std::invalid_argument("vertex out of range");
    return q_var() + 1 + static_cast<VarId>(upper_index(graph.m, i, j));
}

std::vector<VarId> ParamRing::t_vars() const {
    std::vector<VarId> v(static_cast<std::size_t>(n_lambda + n_omega));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = static_cast<VarId>(k);
    return v;
}

std::vector<VarId> ParamRing::sigma_vars() const {
    std::vector<VarId> v;
    for (VarId k = q_var() + 1; k < nvars(); ++k) v.push_back(k);
    return v;
}

Ring sigma_ring(int m) {
    Ring r;
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) r.names.push_back(var_name("s", i, j));
    return r;
}

Ring q_sigma_ring(int m) {
    Ring r = sigma_ring(m);
    r.names.push_back("q");
    return r;
}

TermOrder q_sigma_order(int m) {
    Ring r = sigma_ring(m);
    std::vector<VarId> sig(static_cast<std::size_t>(r.nvars()));
    for (std::size_t k = 0; k < sig.size(); ++k) sig[k] = static_cast<VarId>(k);
    VarId q = r.nvars();
    return TermOrder::block({{{q}, OrderKind::grevlex}, {sig, OrderKind::grevlex}});
}

const Polynomial& SigmaMap::at(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > m) throw std::invalid_argument("sigma index out of range");
    return entries[upper_index(m, i, j)];
}

SigmaMap sigma_polys(const ParamRing& pr) {
    const int m = pr.graph.m;
    const int n = pr.nvars();

    PolyMatrix lambda(static_cast<std::size_t>(m),
                      std::vector<Polynomial>(static_cast<std::size_t>(m)));
    for (auto [i, j] : pr.graph.directed)
        lambda[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
            Polynomial::variable(n, pr.lambda_var(i, j));

    // (I - Lambda)^-1 = I + Lambda + ... + Lambda^(m-1), Lambda nilpotent
    PolyMatrix total = poly_identity(m, n);
    PolyMatrix power = poly_identity(m, n);
    for (int k = 1; k < m; ++k) {
        power = poly_mul(power, lambda);
        total = poly_add(total, power);
    }

    PolyMatrix omega(static_cast<std::size_t>(m),
                     std::vector<Polynomial>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= m; ++i)
        omega[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] =
            Polynomial::variable(n, pr.omega_var(i, i));
    for (auto [i, j] : pr.graph.bidirected) {
        Polynomial w = Polynomial::variable(n, pr.omega_var(i, j));
        omega[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = w;
        omega[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = w;
    }

    PolyMatrix sigma = poly_mul(poly_mul(poly_transpose(total), omega), total);

    SigmaMap map;
    map.m = m;
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            if (sigma[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] !=
                sigma[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)])
                throw std::logic_error("sigma parametrization lost symmetry");
            map.entries.push_back(
                sigma[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
        }
    return map;
}

Polynomial total_effect_poly(const ParamRing& pr, int i, int j) {
    if (i > j) throw std::invalid_argument("total effect needs i <= j");
    if (i == j) return Polynomial::constant(pr.nvars(), Rat(1));
    Polynomial acc;
    for (const auto& [path, poly] : path_effect_polys(pr, i, j)) acc = acc + poly;
    return acc;
}

std::vector<std::pair<DirectedPath, Polynomial>> path_effect_polys(const ParamRing& pr, int i,
                                                                   int j) {
    if (i >= j) throw std::invalid_argument("path effects need i < j");
    std::vector<std::pair<DirectedPath, Polynomial>> out;
    for (const auto& path : directed_paths(pr.graph, i, j)) {
        Polynomial mono = Polynomial::constant(pr.nvars(), Rat(1));
        for (auto [a, b] : path.edges())
            mono = mono * Polynomial::variable(pr.nvars(), pr.lambda_var(a, b));
        out.emplace_back(path, std::move(mono));
    }
    return out;
}

std::string ParameterTarget::name() const {
    std::ostringstream s;
    switch (kind) {
        case TargetKind::direct_effect:
            return var_name("l", i, j);
        case TargetKind::omega_entry:
            return var_name("w", i, j);
        case TargetKind::total_effect:
            s << "TE(" << i << "," << j << ")";
            return s.str();
        case TargetKind::path_effect: {
            s << "PE(";
            for (std::size_t k = 0; k < path.verts.size(); ++k) {
                if (k > 0) s << "->";
                s << path.verts[k];
            }
            s << ")";
            return s.str();
        }
    }
    return "?";
}

std::vector<ParameterTarget> all_targets(const ParamRing& pr) {
    const int m = pr.graph.m;
    const int n = pr.nvars();
    std::vector<ParameterTarget> out;

    for (auto [i, j] : pr.graph.directed)
        out.push_back({TargetKind::direct_effect, i, j, {},
                       Polynomial::variable(n, pr.lambda_var(i, j))});
    for (int i = 1; i <= m; ++i)
        out.push_back(
            {TargetKind::omega_entry, i, i, {}, Polynomial::variable(n, pr.omega_var(i, i))});
    for (auto [i, j] : pr.graph.bidirected)
        out.push_back(
            {TargetKind::omega_entry, i, j, {}, Polynomial::variable(n, pr.omega_var(i, j))});
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            Polynomial te = total_effect_poly(pr, i, j);
            if (!te.is_zero()) out.push_back({TargetKind::total_effect, i, j, {}, te});
        }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (auto& [path, poly] : path_effect_polys(pr, i, j))
                out.push_back({TargetKind::path_effect, i, j, path, poly});
    return out;
}

std::vector<std::vector<Rat>> omega_backsolve_numeric(
    const MixedGraph& g, const std::vector<std::vector<Rat>>& sigma,
    const std::map<std::pair<int, int>, Rat>& lambda) {
    validate_graph(g);
    const std::size_t m = static_cast<std::size_t>(g.m);
    if (sigma.size() != m) throw std::invalid_argument("sigma has wrong dimension");
    for (const auto& row : sigma)
        if (row.size() != m) throw std::invalid_argument("sigma has wrong dimension");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (sigma[i][j] != sigma[j][i]) throw std::invalid_argument("sigma not symmetric");
    for (std::size_t k = 1; k <= m; ++k) {
        std::vector<std::vector<Rat>> minor(k, std::vector<Rat>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = sigma[i][j];
        if (det(std::move(minor)) <= 0)
            throw std::invalid_argument("sigma not positive definite");
    }
    for (const auto& [edge, value] : lambda)
        if (!g.has_directed(edge.first, edge.second))
            throw std::invalid_argument("lambda entry for a non-edge");

    // C = I - Lambda; Omega = C^T Sigma C
    std::vector<std::vector<Rat>> c(m, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) c[i][i] = Rat(1);
    for (const auto& [edge, value] : lambda)
        c[static_cast<std::size_t>(edge.first - 1)][static_cast<std::size_t>(edge.second - 1)] =
            Rat(-value);

    std::vector<std::vector<Rat>> sc(m, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rat acc(0);
            for (std::size_t k = 0; k < m; ++k) acc = Rat(acc + sigma[i][k] * c[k][j]);
            sc[i][j] = acc;
        }
    std::vector<std::vector<Rat>> omega(m, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rat acc(0);
            for (std::size_t k = 0; k < m; ++k) acc = Rat(acc + c[k][i] * sc[k][j]);
            omega[i][j] = acc;
        }
    return omega;
}

}  // namespace semid

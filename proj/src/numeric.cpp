#include "cpn/numeric.hpp"

#include <cmath>
#include <numeric>

#include "cpn/errors.hpp"

namespace cpn {

CMatrix eval_mat(const MatRF& m, Complex point) {
    CMatrix out(m.n());
    const Complex xibar = std::conj(point);
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out.at(i, j) = m.at(i, j).eval(point, xibar);
    if (!out.all_finite()) throw InternalError("non-finite entries after evaluation");
    return out;
}

namespace {

constexpr double kRefFloor = 1e-6;

std::vector<Complex> range_vector(const CMatrix& p) {
    int best = 0;
    for (int j = 1; j < p.n(); ++j)
        if (p.at(j, j).real() > p.at(best, best).real()) best = j;
    if (p.at(best, best).real() < 1e-9)
        throw RankDeficient("projector has no usable range column");
    auto v = p.column(best);
    double norm = 0.0;
    for (const Complex& vi : v) norm += std::norm(vi);
    norm = std::sqrt(norm);
    for (Complex& vi : v) vi /= norm;
    return v;
}

Vframe assemble(const ProjectorTower& tower, Complex point, const std::vector<int>* ref_in) {
    const int n = tower.n;
    Vframe f;
    f.point = point;
    f.v = CMatrix(n);
    f.ordering.resize(static_cast<std::size_t>(n));
    std::iota(f.ordering.begin(), f.ordering.end(), 0);
    f.ref.resize(static_cast<std::size_t>(n));

    for (int k = 0; k < n; ++k) {
        auto v = range_vector(eval_mat(tower.p[static_cast<std::size_t>(k)], point));
        int r = -1;
        if (ref_in) {
            r = (*ref_in)[static_cast<std::size_t>(k)];
            if (std::abs(v[static_cast<std::size_t>(r)]) <= kRefFloor)
                throw RankDeficient("phase reference component below threshold");
        } else {
            for (int i = 0; i < n; ++i)
                if (std::abs(v[static_cast<std::size_t>(i)]) > kRefFloor) {
                    r = i;
                    break;
                }
            if (r < 0) throw RankDeficient("no component above the phase threshold");
        }
        const Complex phase = std::conj(v[static_cast<std::size_t>(r)]) /
                              std::abs(v[static_cast<std::size_t>(r)]);
        for (Complex& vi : v) vi *= phase;
        f.v.set_column(k, v);
        f.ref[static_cast<std::size_t>(k)] = r;
    }
    if (unitarity_drift(f) >= 1e-10) throw InternalError("assembled frame lost unitarity");
    return f;
}

CMatrix antiherm(const CMatrix& m) { return 0.5 * (m - m.adjoint()); }

} // namespace

Vframe assemble_V(const ProjectorTower& tower, Complex point) {
    return assemble(tower, point, nullptr);
}

Vframe assemble_V(const ProjectorTower& tower, Complex point, const std::vector<int>& ref) {
    return assemble(tower, point, &ref);
}

double unitarity_drift(const Vframe& frame) {
    return (frame.v.adjoint() * frame.v - CMatrix::identity(frame.v.n())).inf_norm();
}

double diagonalization_drift(const ProjectorTower& tower, const Vframe& frame) {
    const int n = tower.n;
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        CMatrix ik(n);
        ik.at(k, k) = 1.0;
        const CMatrix pk = eval_mat(tower.p[static_cast<std::size_t>(k)], frame.point);
        worst = std::max(worst, (frame.v.adjoint() * pk * frame.v - ik).inf_norm());
    }
    return worst;
}

bool VGrid::contains(Complex point) const {
    const double slack = 1e-12 * std::max(1.0, spec.half_width);
    return std::abs(point.real() - spec.center.real()) <= spec.half_width + slack &&
           std::abs(point.imag() - spec.center.imag()) <= spec.half_width + slack;
}

Complex VGrid::point_at(int i, int j) const {
    const double step = 2.0 * spec.half_width / (spec.samples_per_axis - 1);
    return spec.center + Complex(-spec.half_width + i * step, -spec.half_width + j * step);
}

Vframe VGrid::frame(Complex point) const {
    if (!contains(point)) throw StencilOutOfGrid("point outside the grid domain");
    return assemble_V(*tower, point);
}

Vframe VGrid::frame(Complex point, const std::vector<int>& ref) const {
    if (!contains(point)) throw StencilOutOfGrid("stencil point outside the grid domain");
    return assemble_V(*tower, point, ref);
}

CMatrix cov_deriv_matrix(const VGrid& grid, int axis, Complex point) {
    if (axis != 1 && axis != 2) throw InternalError("axis must be 1 or 2");
    const double h = grid.spec.fd_step;
    const Complex e = axis == 1 ? Complex(h, 0.0) : Complex(0.0, h);
    const Vframe c = grid.frame(point);
    const Vframe fp = grid.frame(point + e, c.ref);
    const Vframe fm = grid.frame(point - e, c.ref);
    const CMatrix a = Complex(1.0 / (2.0 * h)) * (fp.v - fm.v);
    const CMatrix w = antiherm(c.v.adjoint() * a);
    return a - c.v * w.diag();
}

CMatrix var_op(const CMatrix& a) {
    const CMatrix d = a.diag();
    return (a * a).diag() - d * d;
}

ResidualReport residual_report(const ProjectorTower& tower, const GridSpec& grid, Complex point) {
    const VGrid vg{&tower, grid};
    const double h = grid.fd_step;
    const int n = tower.n;
    const Vframe c = vg.frame(point);
    const CMatrix& v = c.v;
    const CMatrix vdag = v.adjoint();

    // Shared central-difference inputs per real axis: first derivative a,
    // anti-Hermitian connection w with diagonal d, second derivative l2.
    struct Axis {
        CMatrix a, w, d, l2;
    };
    Axis ax[2];
    for (int mu = 0; mu < 2; ++mu) {
        const Complex e = mu == 0 ? Complex(h, 0.0) : Complex(0.0, h);
        const Vframe fp = vg.frame(point + e, c.ref);
        const Vframe fm = vg.frame(point - e, c.ref);
        ax[mu].a = Complex(1.0 / (2.0 * h)) * (fp.v - fm.v);
        ax[mu].w = antiherm(vdag * ax[mu].a);
        ax[mu].d = ax[mu].w.diag();
        ax[mu].l2 = Complex(1.0 / (h * h)) * (fp.v - 2.0 * v + fm.v);
    }

    const CMatrix lap = ax[0].l2 + ax[1].l2;
    const CMatrix vdag_lap = vdag * lap;

    CMatrix sum_aw(n), sum_ww(n), sum_ad(n), sum_dw(n), sum_dd(n), sum_var(n);
    CMatrix d2(n), dv_t(n), dvdag_dv(n);
    for (int mu = 0; mu < 2; ++mu) {
        const Axis& x = ax[mu];
        sum_aw += x.a * x.w;
        sum_ww += (x.w * x.w).diag();
        sum_ad += x.a * x.d;
        sum_dw += x.d * x.w;
        sum_dd += x.d * x.d;
        sum_var += var_op(x.w);

        const CMatrix dv = x.a - v * x.d;
        const CMatrix conn_deriv = (vdag * x.l2 - x.w * x.w).diag();
        const CMatrix ddv = x.l2 - x.a * x.d - v * conn_deriv;
        d2 += ddv - dv * x.d;
        dv_t += dv * (x.w - x.d);
        dvdag_dv += dv.adjoint() * dv;
    }

    const CMatrix r1 = lap - v * vdag_lap.diag() - sum_aw + v * sum_ww - sum_ad + v * sum_dw;
    const CMatrix r1c = d2 - dv_t;
    const CMatrix r2 = lap - v * vdag_lap.diag() - 2.0 * sum_ad + 2.0 * (v * sum_dd);
    const CMatrix r2c = d2 - v * sum_var;

    const CMatrix nu1 = Complex(-4.0) * sum_var;
    const CMatrix lagr = -lap + v * vdag_lap.diag() - 2.0 * (v * sum_ww) + 2.0 * sum_ad;
    const CMatrix nu2 = (2.0 * (vdag * lagr)).diag();

    ResidualReport rep;
    rep.point = point;
    rep.h = h;
    rep.first_expanded = r1.inf_norm();
    rep.first_covariant = r1c.inf_norm();
    rep.second_expanded = r2.inf_norm();
    rep.second_covariant = r2c.inf_norm();
    rep.first_gap = (r1 - r1c).inf_norm();
    rep.second_gap = (r2 - r2c).inf_norm();
    rep.nu_gap = (nu1 - nu2).inf_norm();
    rep.unitarity_drift = cpn::unitarity_drift(c);

    rep.z.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const Complex ri = d2.at(i, k) + dvdag_dv.at(k, k) * v.at(i, k);
            worst = std::max(worst, std::abs(ri));
        }
        rep.z[static_cast<std::size_t>(k)] = worst;
    }
    return rep;
}

double residual_first_form(const ProjectorTower& tower, const GridSpec& grid, Complex point) {
    const ResidualReport rep = residual_report(tower, grid, point);
    if (rep.first_gap >= 1e-8)
        throw PropositionViolated("expanded and covariant first forms disagree");
    return rep.first_expanded;
}

double residual_second_form(const ProjectorTower& tower, const GridSpec& grid, Complex point) {
    const ResidualReport rep = residual_report(tower, grid, point);
    if (rep.second_gap >= 1e-8)
        throw PropositionViolated("expanded and covariant second forms disagree");
    return rep.second_expanded;
}

double z_equation_residual(const ProjectorTower& tower, int k, const GridSpec& grid,
                           Complex point) {
    if (k < 0 || k >= tower.n) throw IndexOutOfRange("column index outside tower");
    return residual_report(tower, grid, point).z[static_cast<std::size_t>(k)];
}

Quadrature action_quadrature(const MatRF& p, int resolution) {
    const MatRF pd = p.d_xi();
    const MatRF pdb = p.d_xibar();
    const int n = p.n();
    const Complex iu(0.0, 1.0);

    auto trace_prod = [n](const CMatrix& a, const CMatrix& b) {
        Complex t = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t += a.at(i, j) * b.at(j, i);
        return t;
    };

    Quadrature q{0.0, 0.0, 0.0};
    const double pi = std::acos(-1.0);
    const double dtheta = pi / resolution;
    const double dphi = 2.0 * pi / resolution;
    for (int i = 0; i < resolution; ++i) {
        const double theta = (i + 0.5) * dtheta;
        const double t = std::tan(theta / 2.0);
        const double sec = 1.0 / std::cos(theta / 2.0);
        const double weight = 0.5 * t * sec * sec * dtheta * dphi;
        for (int j = 0; j < resolution; ++j) {
            const double phi = (j + 0.5) * dphi;
            const Complex xi = t * Complex(std::cos(phi), std::sin(phi));

            const CMatrix ep = eval_mat(p, xi);
            const CMatrix ed = eval_mat(pd, xi);
            const CMatrix edb = eval_mat(pdb, xi);
            const Complex dens_p = trace_prod(ed, edb);

            const CMatrix dx = -iu * (ed * ep - ep * ed);
            const CMatrix dxb = iu * (edb * ep - ep * edb);
            const Complex dens_x = trace_prod(dx, dxb);

            q.density_gap = std::max(q.density_gap, std::abs(dens_x + dens_p));
            q.value += weight * dens_p.real();
            q.x_value += weight * (-dens_x.real());
        }
    }
    return q;
}

} // namespace cpn

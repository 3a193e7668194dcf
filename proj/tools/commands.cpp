#include "commands.hpp"

#include "output.hpp"

#include "metasurf/casimir.hpp"
#include "metasurf/constants.hpp"
#include "metasurf/dyngrating.hpp"
#include "metasurf/effective.hpp"
#include "metasurf/error.hpp"
#include "metasurf/layered.hpp"
#include "metasurf/parallel.hpp"
#include "metasurf/radiate.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <set>

namespace msurf::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr double kGoldOmegaP = 2.0 * phys::pi * 2.068e15;

// Typed access to the config object; every key read is recorded so that
// leftovers (typos, unsupported options) are reported as config errors.
class Params {
public:
    explicit Params(const json& j) : j_(j) {
        if (!j_.is_object()) throw ConfigError("config must be a JSON object");
    }

    bool has(const std::string& k) const { return j_.contains(k); }

    double num(const std::string& k, std::optional<double> def = std::nullopt) {
        used_.insert(k);
        if (!j_.contains(k)) {
            if (!def) throw ConfigError("missing required key '" + k + "'");
            return *def;
        }
        const json& v = j_.at(k);
        if (!v.is_number()) throw ConfigError("key '" + k + "' must be a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ConfigError("key '" + k + "' must be finite");
        return x;
    }

    double positive(const std::string& k, std::optional<double> def = std::nullopt) {
        const double x = num(k, def);
        if (!(x > 0.0)) throw ConfigError("key '" + k + "' must be positive");
        return x;
    }

    int integer(const std::string& k, int def, int min) {
        used_.insert(k);
        if (!j_.contains(k)) return def;
        const json& v = j_.at(k);
        if (!v.is_number_integer()) throw ConfigError("key '" + k + "' must be an integer");
        const int x = v.get<int>();
        if (x < min) throw ConfigError("key '" + k + "' must be at least " + std::to_string(min));
        return x;
    }

    bool flag(const std::string& k, bool def) {
        used_.insert(k);
        if (!j_.contains(k)) return def;
        if (!j_.at(k).is_boolean()) throw ConfigError("key '" + k + "' must be true or false");
        return j_.at(k).get<bool>();
    }

    std::string choice(const std::string& k, const std::string& def, const std::set<std::string>& allowed) {
        used_.insert(k);
        std::string s = def;
        if (j_.contains(k)) {
            if (!j_.at(k).is_string()) throw ConfigError("key '" + k + "' must be a string");
            s = j_.at(k).get<std::string>();
        }
        if (!allowed.count(s)) throw ConfigError("key '" + k + "' has unsupported value '" + s + "'");
        return s;
    }

    // number or array of numbers
    std::vector<double> list(const std::string& k, const std::vector<double>& def) {
        used_.insert(k);
        if (!j_.contains(k)) return def;
        const json& v = j_.at(k);
        std::vector<double> out;
        if (v.is_number()) {
            out.push_back(v.get<double>());
        } else if (v.is_array() && !v.empty()) {
            for (const auto& e : v) {
                if (!e.is_number()) throw ConfigError("key '" + k + "' must hold numbers");
                out.push_back(e.get<double>());
            }
        } else {
            throw ConfigError("key '" + k + "' must be a number or a non-empty array");
        }
        for (double x : out)
            if (!std::isfinite(x)) throw ConfigError("key '" + k + "' must be finite");
        return out;
    }

    void finish() const {
        for (const auto& [k, _] : j_.items())
            if (!used_.count(k)) throw ConfigError("unknown config key '" + k + "'");
    }

private:
    const json& j_;
    std::set<std::string> used_;
};

struct Sweep {
    double start, stop;
    int count;
    bool log;

    std::vector<double> values() const {
        std::vector<double> v(count);
        for (int i = 0; i < count; ++i) {
            const double f = double(i) / (count - 1);
            v[i] = log ? start * std::pow(stop / start, f) : start + (stop - start) * f;
        }
        v.back() = stop;
        return v;
    }
};

Sweep read_sweep(Params& p, const std::string& prefix, double start, double stop, int count,
                 const std::string& spacing = "linear") {
    Sweep s;
    s.start = p.num(prefix + "start", start);
    s.stop = p.num(prefix + "stop", stop);
    s.count = p.integer(prefix + "count", count, 2);
    s.log = p.choice(prefix + "spacing", spacing, {"linear", "log"}) == "log";
    if (s.log && !(s.start > 0.0 && s.stop > 0.0)) throw ConfigError("log spacing needs positive bounds");
    if (!(s.stop != s.start)) throw ConfigError("sweep start and stop must differ");
    return s;
}

double read_omega_p(Params& p, double def) {
    if (p.has("omega_p_eV") && p.has("omega_p_rad_per_s"))
        throw ConfigError("give either omega_p_eV or omega_p_rad_per_s, not both");
    if (p.has("omega_p_eV")) {
        p.num("omega_p_rad_per_s", 0.0);
        return p.positive("omega_p_eV") * phys::eV_to_rad_s;
    }
    p.num("omega_p_eV", 0.0);
    return p.positive("omega_p_rad_per_s", def);
}

std::string path_in(const RunContext& ctx, const std::string& name) {
    fs::create_directories(ctx.out_dir);
    return (fs::path(ctx.out_dir) / name).string();
}

std::string tag(double v) {
    std::string s = out::fmt(v);
    for (char& ch : s)
        if (ch == '.') ch = 'p';
    return s;
}

// omega_sp-type lower SPP branch for general eps_v: kappa_m/eps_m + kappa_v/eps_v = 0
double spp_lower_general(double k, double wp, double eps_v) {
    const double top = std::min(wp / std::sqrt(1.0 + eps_v), phys::c * k / std::sqrt(eps_v)) * (1.0 - 1e-14);
    auto f = [&](double w) {
        const double em = 1.0 - wp * wp / (w * w);
        const double q = w / phys::c;
        return std::sqrt(k * k - em * q * q) / em + std::sqrt(k * k - eps_v * q * q) / eps_v;
    };
    return bisect(f, top * 1e-9, top, 1e-13);
}

} // namespace

int cmd_dispersion(const json& cfg, const RunContext& ctx) {
    Params p(cfg);
    const double wp = read_omega_p(p, kGoldOmegaP);
    const double eps_v = p.positive("eps_v", 1.0);
    const Sweep ks = read_sweep(p, "k_over_kp_", 0.01, 3.0, 200);
    p.finish();
    if (!(ks.start > 0.0 && ks.stop > 0.0)) throw ConfigError("k_over_kp range must be positive");

    const DrudeLorentz metal = DrudeLorentz::free_electron(wp);
    const auto kv = ks.values();
    std::vector<std::pair<double, double>> res(kv.size());
    parallel_for(
        kv.size(),
        [&](std::size_t i) {
            const double k = kv[i] * metal.k_p();
            if (eps_v == 1.0) {
                res[i] = spp_single_explicit(k, metal);
            } else {
                res[i] = {spp_lower_general(k, wp, eps_v), std::nan("")};
            }
        },
        ctx.workers);
    const std::string path = path_in(ctx, "dispersion.csv");
    out::CsvWriter w(path, "dispersion");
    for (std::size_t i = 0; i < kv.size(); ++i) {
        w.row({out::fmt(kv[i]), out::fmt(res[i].first / wp), "lower"});
        if (!std::isnan(res[i].second)) w.row({out::fmt(kv[i]), out::fmt(res[i].second / wp), "upper"});
    }
    w.close();
    out::write_sidecar(path, "dispersion", {{"omega_p_rad_per_s", wp}, {"eps_v", eps_v}, {"geometry", "single interface"}});
    return 0;
}

int cmd_film_dispersion(const json& cfg, const RunContext& ctx) {
    Params p(cfg);
    const double wp = read_omega_p(p, kGoldOmegaP);
    FilmSpec film;
    film.eps_v = p.positive("eps_v", 1.0);
    film.eps_i = p.positive("eps_i", 1.0);
    const double lp = 2.0 * phys::pi * phys::c / wp;
    if (p.has("d_nm") && p.has("d_over_lambda_p")) throw ConfigError("give either d_nm or d_over_lambda_p");
    film.d = p.has("d_nm") ? p.positive("d_nm") * 1e-9 : p.positive("d_over_lambda_p", 0.1) * lp;
    p.num(p.has("d_nm") ? "d_over_lambda_p" : "d_nm", 0.0);
    const Regime regime = p.choice("regime", "retarded", {"retarded", "quasistatic"}) == "retarded"
                              ? Regime::retarded
                              : Regime::quasistatic;
    const Sweep ks = read_sweep(p, "k_over_kp_", 0.05, 3.0, 200);
    p.finish();
    if (!(ks.start > 0.0 && ks.stop > 0.0)) throw ConfigError("k_over_kp range must be positive");

    const DrudeLorentz metal = DrudeLorentz::free_electron(wp);
    const auto kv = ks.values();
    std::vector<std::vector<FilmRoot>> res(kv.size());
    parallel_for(
        kv.size(),
        [&](std::size_t i) {
            try {
                res[i] = film_dispersion_solve(film, kv[i] * metal.k_p(), metal, regime);
            } catch (const BracketError&) {
                // no bound mode at this k: legitimately empty
            }
        },
        ctx.workers);
    const std::string path = path_in(ctx, "film_dispersion.csv");
    out::CsvWriter w(path, "dispersion");
    for (std::size_t i = 0; i < kv.size(); ++i)
        for (const auto& r : res[i])
            w.row({out::fmt(kv[i]), out::fmt(r.omega / wp), r.parity == Parity::even ? "even" : "odd"});
    w.close();
    out::write_sidecar(path, "dispersion",
                       {{"omega_p_rad_per_s", wp},
                        {"eps_v", film.eps_v},
                        {"eps_i", film.eps_i},
                        {"d_m", film.d},
                        {"regime", regime == Regime::retarded ? "retarded" : "quasistatic"}});
    return 0;
}

int cmd_stability(const json& cfg, const RunContext& ctx) {
    Params p(cfg);
    FilmMaterial mat = FilmMaterial::mercury();
    mat.omega_p = read_omega_p(p, mat.omega_p);
    mat.gamma_sf = p.positive("gamma_sf_meV_per_A2", 27.6) * phys::meV_per_A2;
    const auto eps_list = p.list("eps_i", {1.0, 2.0, 3.0});
    const Sweep ds = read_sweep(p, "d_nm_", 1.0, 1000.0, 64, "log");
    const Sweep ls = read_sweep(p, "lambda_nm_", 10.0, 10000.0, 64, "log");
    p.finish();
    if (!(ds.start > 0 && ds.stop > ds.start && ls.start > 0 && ls.stop > ls.start))
        throw ConfigError("d and lambda ranges must be positive and increasing");
    for (double e : eps_list)
        if (!(e > 0.0)) throw ConfigError("eps_i values must be positive");

    std::vector<double> d_axis, l_axis;
    for (double v : ds.values()) d_axis.push_back(v * 1e-9);
    for (double v : ls.values()) l_axis.push_back(v * 1e-9);

    for (double eps_i : eps_list) {
        const StabilityMap map = stability_map(d_axis, l_axis, mat, eps_i, ctx.workers);
        const std::string gpath = path_in(ctx, "stability_eps_i_" + tag(eps_i) + ".csv");
        out::CsvWriter gw(gpath, "stability_grid");
        for (std::size_t i = 0; i < d_axis.size(); ++i)
            for (std::size_t j = 0; j < l_axis.size(); ++j)
                gw.row({out::fmt(d_axis[i] * 1e9), out::fmt(l_axis[j] * 1e9), out::fmt(map.grid.at(i, j))});
        gw.close();
        const std::string cpath = path_in(ctx, "contour_eps_i_" + tag(eps_i) + ".csv");
        out::CsvWriter cw(cpath, "stability_contour");
        std::size_t empty = 0;
        for (const auto& c : map.contour) {
            if (c.d_critical) {
                cw.row({out::fmt(c.lambda * 1e9), out::fmt(*c.d_critical * 1e9)});
            } else {
                cw.row({out::fmt(c.lambda * 1e9), "none"});
                ++empty;
            }
        }
        cw.close();
        const json meta{{"eps_i", eps_i},
                        {"omega_p_rad_per_s", mat.omega_p},
                        {"gamma_sf_J_per_m2", mat.gamma_sf},
                        {"normalization", "per unit area, second derivative in A"}};
        out::write_sidecar(gpath, "stability_grid", meta);
        json cmeta = meta;
        cmeta["empty_columns"] = empty;
        out::write_sidecar(cpath, "stability_contour", cmeta);
    }
    return 0;
}

namespace {

GratingConfig read_grating(Params& p, double A_nm, int m_c, double omega_over_gc, bool read_v = true) {
    GratingConfig g;
    g.A = p.num("A_nm", A_nm) * 1e-9;
    g.g = p.positive("g_rad_per_um", 2.0 * phys::pi) * 1e6;
    if (read_v) g.Omega = p.num("v_ph_over_c", 0.0) * phys::c * g.g;
    g.eps_above = p.positive("eps_above", 1.0);
    g.eps_below = p.positive("eps_below", 2.25);
    g.m_c = p.integer("m_c", m_c, 1);
    g.incidence.omega = p.num("omega_over_gc", omega_over_gc) * g.g * phys::c;
    g.incidence.theta = p.num("theta_deg", 0.0) * phys::pi / 180.0;
    g.incidence.pol = p.choice("pol", "s", {"s", "p"}) == "s" ? Pol::s : Pol::p;
    g.incidence.amplitude = p.num("amplitude_V_per_m", 1.0);
    return g;
}

void check_grating(const GratingConfig& g) {
    try {
        g.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

// log-log least squares slope
double fit_exponent(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) continue;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return std::nan("");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

int cmd_diffract(const json& cfg, const RunContext& ctx) {
    Params p(cfg);
    GratingConfig base = read_grating(p, 1.0, 3, 0.8);
    const std::string var = p.choice("sweep", "angle", {"angle", "frequency", "amplitude"});
    Sweep sw;
    if (var == "angle") sw = read_sweep(p, "sweep_", -80.0, 80.0, 161);
    else if (var == "frequency") sw = read_sweep(p, "sweep_", 0.5, 1.2, 141);
    else sw = read_sweep(p, "sweep_", 0.25, 4.0, 9, "log");
    const std::string solver = p.choice("solver", "both", {"full", "effective", "both"});
    const double wood_tol = p.positive("wood_tolerance", 1e-3);
    p.finish();
    check_grating(base);

    const auto xs = sw.values();
    struct Sample {
        bool anomaly = false;
        std::optional<DiffractionResult> full, eff;
    };
    std::vector<Sample> res(xs.size());
    std::vector<GratingConfig> cfgs(xs.size(), base);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        GratingConfig& c = cfgs[i];
        if (var == "angle") c.incidence.theta = xs[i] * phys::pi / 180.0;
        else if (var == "frequency") c.incidence.omega = xs[i] * c.g * phys::c;
        else c.A = xs[i] * 1e-9;
        check_grating(c);
    }
    parallel_for(
        xs.size(),
        [&](std::size_t i) {
            const GratingConfig& c = cfgs[i];
            Sample& s = res[i];
            s.anomaly = wood_distance(c) < wood_tol;
            try {
                if (solver != "effective") s.full = solve_diffraction(c);
                if (solver != "full") s.eff = solve_effective(c);
            } catch (const SingularSystemError&) {
                s.anomaly = true;
            } catch (const DomainError&) {
                s.anomaly = true;   // degenerate static replica
            }
        },
        ctx.workers);

    const std::string path = path_in(ctx, "amplitudes_" + var + ".csv");
    out::CsvWriter w(path, "amplitudes");
    auto emit = [&](double x, const GratingConfig& c, const std::optional<DiffractionResult>& r,
                    const std::string& name, bool anomaly) {
        for (int m = -c.m_c; m <= c.m_c; ++m) {
            for (int ch = 0; ch < 2; ++ch) {
                const char* chan = ch == 0 ? "reflected" : "transmitted";
                if (!r) {
                    w.row({out::fmt(x), std::to_string(m), chan, "nan", "nan", "nan", name, "1"});
                    continue;
                }
                const cplx a = ch == 0 ? r->reflected.at(m) : r->transmitted.at(m);
                w.row({out::fmt(x), std::to_string(m), chan, out::fmt(a.real()), out::fmt(a.imag()),
                       out::fmt(std::norm(a)), name, anomaly ? "1" : "0"});
            }
        }
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (solver != "effective") emit(xs[i], cfgs[i], res[i].full, "full", res[i].anomaly);
        if (solver != "full") emit(xs[i], cfgs[i], res[i].eff, "effective", res[i].anomaly);
    }
    w.close();

    const char* unit = var == "angle" ? "deg" : var == "frequency" ? "omega_in/(g c)" : "A in nm";
    json meta{{"sweep", var},
              {"sweep_var_unit", unit},
              {"pol", base.incidence.pol == Pol::s ? "s" : "p"},
              {"g_rad_per_m", base.g},
              {"Omega_rad_per_s", base.Omega},
              {"eps_above", base.eps_above.real()},
              {"eps_below", base.eps_below.real()},
              {"m_c", base.m_c}};
    std::size_t anomalies = 0;
    for (const auto& s : res) anomalies += s.anomaly;
    meta["anomaly_samples"] = anomalies;
    if (var == "amplitude") {
        json fit = json::object();
        for (const char* which : {"full", "effective"}) {
            if ((solver == "full" && std::string(which) == "effective") ||
                (solver == "effective" && std::string(which) == "full"))
                continue;
            for (int m : {-1, 1}) {
                std::vector<double> a, y;
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    const auto& r = std::string(which) == "full" ? res[i].full : res[i].eff;
                    if (!r || res[i].anomaly) continue;
                    a.push_back(xs[i]);
                    y.push_back(r->transmitted.intensity(m));
                }
                fit[std::string(which)][m < 0 ? "order_-1" : "order_+1"] = fit_exponent(a, y);
            }
        }
        meta["fitted_exponent_transmitted"] = fit;
    }
    out::write_sidecar(path, "amplitudes", meta);
    return 0;
}

int cmd_field(const json& cfg, const RunContext& ctx) {
    Params p(cfg);
    const auto vs = p.list("v_ph_over_c", {0.2, 0.8, 1.2});
    GratingConfig base = read_grating(p, 50.0, 10, 0.0, false);
    const int nx = p.integer("nx", 256, 2), nz = p.integer("nz", 256, 2);
    const double z0 = p.num("z_min_times_g", -3.0), z1 = p.num("z_max_times_g", 3.0);
    const double t = p.num("t_s", 0.0);
    const bool exclude = p.flag("exclude_static", false);
    const std::string format = p.choice("format", "csv", {"csv", "bin"});
    p.finish();
    if (!(z1 > z0)) throw ConfigError("z range must be increasing");

    std::vector<double> xs(nx), zs(nz);
    for (int i = 0; i < nx; ++i) xs[i] = 2.0 * phys::pi / base.g * i / (nx - 1);
    for (int i = 0; i < nz; ++i) zs[i] = (z0 + (z1 - z0) * i / (nz - 1)) / base.g;

    for (double v : vs) {
        GratingConfig c = base;
        c.Omega = v * phys::c * c.g;
        check_grating(c);
        const DiffractionResult r = solve_diffraction(c);
        std::vector<double> I(std::size_t(nx) * nz);
        FieldOptions opt{t, exclude};
        parallel_for(
            nx,
            [&](std::size_t ix) {
                const auto col = reconstruct_fields(c, r, {xs[ix]}, zs, opt);
                std::copy(col.begin(), col.end(), I.begin() + ix * nz);
            },
            ctx.workers);
        const std::string stem = "field_v_" + tag(v);
        json meta{{"v_ph_over_c", v},
                  {"nx", nx},
                  {"nz", nz},
                  {"layout", "row-major over x"},
                  {"A_m", c.A},
                  {"g_rad_per_m", c.g},
                  {"m_c", c.m_c},
                  {"exclude_static", exclude}};
        if (auto th = cerenkov_angle(v * phys::c, c.eps_above.real())) meta["cerenkov_angle_above_rad"] = *th;
        if (auto th = cerenkov_angle(v * phys::c, c.eps_below.real())) meta["cerenkov_angle_below_rad"] = *th;
        if (format == "bin") {
            const std::string path = path_in(ctx, stem + ".bin");
            out::write_dgf1(path, nx, nz, I);
            out::write_sidecar(path, "field", meta);
        } else {
            const std::string path = path_in(ctx, stem + ".csv");
            out::CsvWriter w(path, "field");
            for (int ix = 0; ix < nx; ++ix)
                for (int iz = 0; iz < nz; ++iz)
                    w.row({out::fmt(xs[ix] * c.g / (2.0 * phys::pi)), out::fmt(zs[iz] * c.g),
                           out::fmt(I[std::size_t(ix) * nz + iz])});
            w.close();
            out::write_sidecar(path, "field", meta);
        }
    }
    return 0;
}

int cmd_cerenkov(const json& cfg, const RunContext& ctx) {
    Params p(cfg);
    SwiftCharge q;
    q.charge = p.num("charge_C", phys::e_charge);
    q.n = p.positive("n", 1.5);
    const std::string var = p.choice("sweep", "beta", {"beta", "omega"});
    const double beta = p.positive("beta", 1.0);
    const double omega = p.positive("omega_rad_per_s", 1e15);
    const Sweep sw = var == "beta" ? read_sweep(p, "sweep_", 0.5, 1.0, 101) : read_sweep(p, "sweep_", 1e14, 1e16, 101);
    p.finish();
    if (var == "beta" && !(sw.start > 0.0 && sw.stop <= 1.0 && sw.stop > 0.0 && sw.start <= 1.0))
        throw ConfigError("beta sweep must stay within (0, 1]");
    if (var == "omega" && !(sw.start > 0.0 && sw.stop > 0.0)) throw ConfigError("omega sweep must be positive");
    if (var == "omega" && !(beta <= 1.0)) throw ConfigError("beta must lie in (0, 1]");

    const auto xs = sw.values();
    const std::string path = path_in(ctx, "cerenkov_" + var + ".csv");
    out::CsvWriter w(path, "cerenkov");
    std::vector<double> ws, ps;
    for (double x : xs) {
        SwiftCharge s = q;
        s.beta = var == "beta" ? x : beta;
        const double om = var == "omega" ? x : omega;
        const double P = frank_tamm_spectral_power(s, om);
        const auto th = cerenkov_angle_particle(s);
        w.row({out::fmt(s.beta), out::fmt(om), out::fmt(P), th ? out::fmt(*th) : "none"});
        ws.push_back(om);
        ps.push_back(P);
    }
    w.close();
    json meta{{"sweep", var}, {"n", q.n}, {"charge_C", q.charge}};
    if (var == "omega") {
        // P = s * omega exactly; report the slope and the worst deviation from it
        const double slope = ps.back() / ws.back();
        double dev = 0.0;
        for (std::size_t i = 0; i < ws.size(); ++i)
            if (slope != 0.0) dev = std::max(dev, std::abs(ps[i] / (slope * ws[i]) - 1.0));
        meta["slope_J_s_per_m"] = slope;
        meta["max_relative_nonlinearity"] = dev;
    }
    out::write_sidecar(path, "cerenkov", meta);
    return 0;
}

int cmd_casimir_du(const json& cfg, const RunContext& ctx) {
    Params p(cfg);
    const double wp = read_omega_p(p, kGoldOmegaP);
    const auto ds = p.list("d_nm", {5.0, 10.0, 50.0});
    p.finish();
    for (double d : ds)
        if (!(d > 0.0)) throw ConfigError("d_nm values must be positive");
    const double ws = wp / std::sqrt(2.0);
    const std::string path = path_in(ctx, "casimir_du.csv");
    out::CsvWriter w(path, "casimir_du");
    for (double dn : ds) {
        const double d = dn * 1e-9;
        w.row({out::fmt(dn), out::fmt(quasistatic_delta_u(d, ws, true)), out::fmt(quasistatic_delta_u(d, ws, false)),
               out::fmt(quasistatic_delta_u_lifshitz(d, wp)), out::fmt(-phys::pi * phys::hbar * ws / (32.0 * d * d))});
    }
    w.close();
    out::write_sidecar(path, "casimir_du", {{"omega_p_rad_per_s", wp}, {"normalization", "per unit area"}});
    return 0;
}

} // namespace msurf::cli

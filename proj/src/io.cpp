#include "tricomi/io.hpp"

#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace tricomi {

namespace {

std::string fmt17(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

void write_records_csv(std::span<const LifespanRecord> records,
                       const std::string& path) {
    std::ofstream out = open_out(path);
    out << "epsilon,T_measured,threshold,dr,dt_policy\n";
    for (const auto& r : records) {
        out << fmt17(r.epsilon) << ',' << fmt17(r.T_measured) << ','
            << fmt17(r.threshold_used) << ',' << fmt17(r.dr) << ','
            << r.dt_policy << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<LifespanRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("records csv: missing header in " + path);
    if (line != "epsilon,T_measured,threshold,dr,dt_policy")
        throw std::runtime_error("records csv: unexpected header in " + path);
    std::vector<LifespanRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        LifespanRecord r;
        auto next = [&]() {
            if (!std::getline(ss, field, ','))
                throw std::runtime_error("records csv: short row in " + path);
            return field;
        };
        r.epsilon = std::stod(next());
        r.T_measured = std::stod(next());
        r.threshold_used = std::stod(next());
        r.dr = std::stod(next());
        r.dt_policy = next();
        r.blew_up = std::isfinite(r.T_measured) && r.T_measured > 0.0;
        if (!r.blew_up)
            r.note = std::isnan(r.T_measured) ? "failed run" : "reached T_max";
        records.push_back(std::move(r));
    }
    return records;
}

void write_snapshots_csv(const History& history, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "t,r,u,v\n";
    for (const auto& s : history.snaps)
        for (int j = 0; j < history.stencil.n; ++j)
            out << fmt17(s.t) << ',' << fmt17(history.stencil.r(j)) << ','
                << fmt17(s.u[j]) << ',' << fmt17(s.v[j]) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["N"] = cfg.problem.expo.N;
    j["m1"] = cfg.problem.expo.m1;
    j["m2"] = cfg.problem.expo.m2;
    j["p"] = cfg.problem.expo.p;
    j["q"] = cfg.problem.expo.q;
    j["epsilon"] = cfg.problem.epsilon;
    j["profile"] = data_profile_name(cfg.problem.profile);
    j["r0"] = cfg.problem.r0;
    j["a"] = cfg.problem.a;
    j["b"] = cfg.problem.b;
    j["f1_amp"] = cfg.problem.f1_amp;
    j["g1_amp"] = cfg.problem.g1_amp;
    j["f2_amp"] = cfg.problem.f2_amp;
    j["g2_amp"] = cfg.problem.g2_amp;
    j["grid"] = {{"dr", cfg.grid.dr},
                 {"c_cfl", cfg.grid.c_cfl},
                 {"speed_floor", cfg.grid.speed_floor},
                 {"domain_radius", cfg.grid.domain_radius},
                 {"domain_margin", cfg.grid.domain_margin},
                 {"snapshot_stride", cfg.grid.snapshot_stride}};
    j["T_max"] = cfg.T_max;
    j["threshold"] = cfg.threshold;
    return j;
}

}  // namespace

RunConfig read_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json j;
    in >> j;
    RunConfig cfg;
    cfg.problem.expo.N = j.value("N", 3);
    cfg.problem.expo.m1 = j.value("m1", 0.0);
    cfg.problem.expo.m2 = j.value("m2", 0.0);
    cfg.problem.expo.p = j.value("p", 2.0);
    cfg.problem.expo.q = j.value("q", 2.0);
    cfg.problem.epsilon = j.value("epsilon", 0.1);
    cfg.problem.profile = data_profile_from_name(j.value("profile", "bump"));
    cfg.problem.r0 = j.value("r0", 1.0);
    cfg.problem.a = j.value("a", 1.0);
    cfg.problem.b = j.value("b", 1.0);
    cfg.problem.f1_amp = j.value("f1_amp", 0.0);
    cfg.problem.g1_amp = j.value("g1_amp", 1.0);
    cfg.problem.f2_amp = j.value("f2_amp", 0.0);
    cfg.problem.g2_amp = j.value("g2_amp", 1.0);
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        cfg.grid.dr = g.value("dr", 0.02);
        cfg.grid.c_cfl = g.value("c_cfl", 0.4);
        cfg.grid.speed_floor = g.value("speed_floor", 0.05);
        cfg.grid.domain_radius = g.value("domain_radius", 0.0);
        cfg.grid.domain_margin = g.value("domain_margin", 1.0);
        cfg.grid.snapshot_stride = g.value("snapshot_stride", 0);
    }
    cfg.T_max = j.value("T_max", 10.0);
    cfg.threshold = j.value("threshold", 1e6);
    return cfg;
}

void write_config_json(const RunConfig& cfg, const std::string& path) {
    std::ofstream out = open_out(path);
    out << config_to_json(cfg).dump(2) << '\n';
}

std::string config_hash(const RunConfig& cfg) {
    const std::string dump = config_to_json(cfg).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

void write_manifest(const RunConfig& cfg, std::span<const std::string> outputs,
                    const std::string& path) {
    nlohmann::json j;
    j["config"] = config_to_json(cfg);
    j["config_hash"] = config_hash(cfg);
    j["version"] = "1.0.0";
    j["outputs"] = std::vector<std::string>(outputs.begin(), outputs.end());
    j["seeds"] = nlohmann::json::array();  // fully deterministic pipeline
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["created_utc"] = buf;
    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
}

namespace {

struct SvgCanvas {
    std::ostringstream body;
    int width, height;
    SvgCanvas(int w, int h) : width(w), height(h) {}
    void rect(double x, double y, double w, double h, const std::string& fill) {
        body << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
             << "\" height=\"" << h << "\" fill=\"" << fill << "\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const std::string& c,
              double sw = 1.0, const std::string& dash = "") {
        body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
             << "\" y2=\"" << y2 << "\" stroke=\"" << c << "\" stroke-width=\""
             << sw << "\"";
        if (!dash.empty()) body << " stroke-dasharray=\"" << dash << "\"";
        body << "/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& c, double sw = 2.0) {
        if (pts.size() < 2) return;
        body << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\""
             << sw << "\" points=\"";
        for (auto [x, y] : pts) body << x << ',' << y << ' ';
        body << "\"/>\n";
    }
    void circle(double x, double y, double r, const std::string& c) {
        body << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
             << "\" fill=\"" << c << "\"/>\n";
    }
    void text(double x, double y, const std::string& s, int size = 12) {
        body << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
             << "\" font-family=\"sans-serif\">" << s << "</text>\n";
    }
    void save(const std::string& path) {
        std::ofstream out = open_out(path);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
            << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
            << height << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body.str() << "</svg>\n";
    }
};

const char* regime_color(Regime r) {
    switch (r) {
        case Regime::GlasseySubcritical: return "#f4a65d";
        case Regime::StraussSubcritical: return "#f7d060";
        case Regime::StraussCritical: return "#3d6fb5";
        case Regime::NoBlowupPredicted: return "#e8eef4";
    }
    return "#ffffff";
}

// smallest q with f_ss(...) == 0 along one column, or NaN
double curve_crossing(int N, double m, double p, bool swapped, double q_lo,
                      double q_hi) {
    auto f = [&](double q) {
        return swapped ? f_ss(N, m, q, p) : f_ss(N, m, p, q);
    };
    const int scan = 200;
    double prev_q = q_lo, prev_f = f(q_lo);
    for (int i = 1; i <= scan; ++i) {
        const double q = q_lo * std::pow(q_hi / q_lo, double(i) / scan);
        const double fq = f(q);
        if (prev_f == 0.0) return prev_q;
        if (prev_f * fq < 0.0) {
            double a = prev_q, b = q;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (a + b);
                if (f(a) * f(mid) <= 0.0)
                    b = mid;
                else
                    a = mid;
            }
            return 0.5 * (a + b);
        }
        prev_q = q;
        prev_f = fq;
    }
    return std::nan("");
}

}  // namespace

void export_region_plot(const CurveGrid& grid, int N, double m1, double m2,
                        const std::string& path) {
    const int W = 640, H = 640, M = 60;
    SvgCanvas svg(W, H);
    const double p_lo = grid.p_axis.front(), p_hi = grid.p_axis.back();
    const double q_lo = grid.q_axis.front(), q_hi = grid.q_axis.back();
    auto X = [&](double p) {
        return M + (W - 2 * M) * std::log(p / p_lo) / std::log(p_hi / p_lo);
    };
    auto Y = [&](double q) {
        return H - M - (H - 2 * M) * std::log(q / q_lo) / std::log(q_hi / q_lo);
    };
    const std::size_t np = grid.p_axis.size(), nq = grid.q_axis.size();
    for (std::size_t iq = 0; iq < nq; ++iq) {
        for (std::size_t ip = 0; ip < np; ++ip) {
            const double x0 = ip == 0 ? X(p_lo) : X(grid.p_axis[ip - 1]);
            const double x1 = X(grid.p_axis[ip]);
            const double y0 = iq == 0 ? Y(q_lo) : Y(grid.q_axis[iq - 1]);
            const double y1 = Y(grid.q_axis[iq]);
            svg.rect(x0, y1, x1 - x0, y0 - y1, regime_color(grid.at(ip, iq)));
        }
    }
    const bool equal = m1 == m2;
    const double m_hi = std::max(m1, m2);
    const bool swapped_primary = !equal && m1 < m2;
    std::vector<std::pair<double, double>> curve, curve2;
    for (int i = 0; i <= 240; ++i) {
        const double p = p_lo * std::pow(p_hi / p_lo, double(i) / 240.0);
        const double q = curve_crossing(N, m_hi, p, swapped_primary, q_lo, q_hi);
        if (std::isfinite(q)) curve.emplace_back(X(p), Y(q));
        if (equal) {
            const double q2 = curve_crossing(N, m_hi, p, true, q_lo, q_hi);
            if (std::isfinite(q2)) curve2.emplace_back(X(p), Y(q2));
        }
    }
    svg.polyline(curve, "#1f4e9c");
    if (equal) svg.polyline(curve2, "#b03030");
    svg.line(M, H - M, W - M, H - M, "black");
    svg.line(M, M, M, H - M, "black");
    std::ostringstream title;
    title << "blow-up region, N=" << N << " m1=" << m1 << " m2=" << m2;
    svg.text(M, M - 14, title.str(), 14);
    svg.text(W - M - 20, H - M + 30, "p");
    svg.text(M - 30, M + 10, "q");
    svg.text(M, H - M + 30, "p=" + std::to_string(p_lo));
    svg.save(path);
}

void export_lifespan_plot(std::span<const LifespanRecord> records,
                          const FitResult& fit, const RegimeReport& report,
                          const std::string& path) {
    const int W = 640, H = 480, M = 60;
    SvgCanvas svg(W, H);
    std::vector<std::pair<double, double>> pts;  // (log eps, log T)
    for (const auto& r : records)
        if (r.blew_up && std::isfinite(r.T_measured))
            pts.emplace_back(std::log(r.epsilon), std::log(r.T_measured));
    if (!pts.empty()) {
        double x_lo = pts[0].first, x_hi = pts[0].first;
        double y_lo = pts[0].second, y_hi = pts[0].second;
        for (auto [x, y] : pts) {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
        const double xpad = 0.1 * std::max(1e-6, x_hi - x_lo);
        const double ypad = 0.1 * std::max(1e-6, y_hi - y_lo);
        x_lo -= xpad;
        x_hi += xpad;
        y_lo -= ypad;
        y_hi += ypad;
        auto X = [&](double x) { return M + (W - 2 * M) * (x - x_lo) / (x_hi - x_lo); };
        auto Y = [&](double y) { return H - M - (H - 2 * M) * (y - y_lo) / (y_hi - y_lo); };
        svg.polyline({{X(x_lo), Y(fit.intercept + fit.slope * x_lo)},
                      {X(x_hi), Y(fit.intercept + fit.slope * x_hi)}},
                     "#1f4e9c", 1.5);
        if (report.primary.kind == BoundKind::PowerLaw) {
            // guide with the predicted slope through the data centroid
            double cx = 0, cy = 0;
            for (auto [x, y] : pts) {
                cx += x;
                cy += y;
            }
            cx /= pts.size();
            cy /= pts.size();
            const double s = -report.primary.exponent;
            svg.line(X(x_lo), Y(cy + s * (x_lo - cx)), X(x_hi),
                     Y(cy + s * (x_hi - cx)), "#b03030", 1.5, "6,4");
        }
        for (auto [x, y] : pts) svg.circle(X(x), Y(y), 4, "#222222");
    }
    svg.line(M, H - M, W - M, H - M, "black");
    svg.line(M, M, M, H - M, "black");
    std::ostringstream lbl;
    lbl << "log T vs log eps; fitted slope " << fit.slope;
    if (report.primary.kind == BoundKind::PowerLaw)
        lbl << ", predicted " << -report.primary.exponent;
    svg.text(M, M - 14, lbl.str(), 14);
    svg.save(path);
}

}  // namespace tricomi

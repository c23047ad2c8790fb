#include "loopconv/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace loopconv {

using nlohmann::json;

namespace {

json matrix_part(const CMatrix& a, bool imag) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(imag ? a(r, c).imag() : a(r, c).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError(std::string("unexpected JSON shape: ") + e.what());
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string loop_to_json(const LoopPoly& g) {
    json coeffs = json::array();
    for (int k = -g.m(); k <= g.m(); ++k) {
        coeffs.push_back(json::array({k, matrix_part(g.coeff(k), false), matrix_part(g.coeff(k), true)}));
    }
    return json{{"n", g.n()}, {"m", g.m()}, {"coeffs", std::move(coeffs)}}.dump();
}

LoopPoly loop_from_json(std::string_view record) {
    const json j = parse(record);
    return guarded([&] {
        const int n = j.at("n").get<int>();
        const int m = j.at("m").get<int>();
        if (n < 1 || m < 0) throw DomainError("loop record: bad n or m");
        std::vector<CMatrix> coeffs(static_cast<size_t>(2 * m + 1), CMatrix::Zero(n, n));
        for (const auto& entry : j.at("coeffs")) {
            const int k = entry.at(0).get<int>();
            if (k < -m || k > m) throw DomainError("loop record: degree out of range");
            const auto& re = entry.at(1);
            const auto& im = entry.at(2);
            if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
                throw DomainError("loop record: matrix shape");
            CMatrix& a = coeffs[static_cast<size_t>(k + m)];
            for (int r = 0; r < n; ++r) {
                if (static_cast<int>(re.at(r).size()) != n || static_cast<int>(im.at(r).size()) != n)
                    throw DomainError("loop record: matrix shape");
                for (int c = 0; c < n; ++c) a(r, c) = {re.at(r).at(c).get<double>(), im.at(r).at(c).get<double>()};
            }
        }
        return LoopPoly::make(TrigPoly(n, m, std::move(coeffs)));
    });
}

void write_loops_jsonl(std::ostream& out, const std::vector<LoopPoly>& loops) {
    for (const auto& g : loops) out << loop_to_json(g) << '\n';
}

std::vector<LoopPoly> read_loops_jsonl(std::istream& in) {
    std::vector<LoopPoly> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(loop_from_json(line));
    }
    return out;
}

void write_delta_csv(std::ostream& out, const std::vector<DeltaPoint>& points, int n) {
    std::string text = "energy";
    for (int i = 1; i <= n; ++i) text += ",v" + std::to_string(i);
    text += '\n';
    for (const auto& p : points) {
        if (static_cast<int>(p.v.v.size()) != n) throw DimensionError("write_delta_csv: coordinate count");
        text += format_double(p.energy);
        for (double v : p.v.v) text += ',' + format_double(v);
        text += '\n';
    }
    out << text;
}

std::vector<DeltaPoint> read_delta_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("energy", 0) != 0) throw DomainError("delta CSV: missing header");
    const auto columns = static_cast<size_t>(std::count(line.begin(), line.end(), ',')) + 1;
    std::vector<DeltaPoint> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        DeltaPoint p;
        bool first = true;
        while (std::getline(ss, cell, ',')) {
            double x = 0.0;
            size_t used = 0;
            try {
                x = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != cell.size()) throw DomainError("delta CSV: bad number '" + cell + "'");
            if (first) {
                p.energy = x;
                first = false;
            } else {
                p.v.v.push_back(x);
            }
        }
        if (p.v.v.size() + 1 != columns) throw DomainError("delta CSV: row width differs from header");
        out.push_back(std::move(p));
    }
    return out;
}

std::string hull_to_json(const HullModel& h) {
    return json{{"dim", h.dim}, {"extremes", h.extremes}, {"tol", h.tol}}.dump();
}

HullModel hull_from_json(std::string_view text) {
    const json j = parse(text);
    return guarded([&] {
        HullModel h{j.at("dim").get<int>(), j.at("extremes").get<std::vector<Point>>(), j.at("tol").get<double>()};
        if (h.dim != 2 && h.dim != 3) throw DomainError("hull JSON: dim must be 2 or 3");
        for (const auto& e : h.extremes)
            if (static_cast<int>(e.size()) != h.dim) throw DomainError("hull JSON: point dimension");
        return h;
    });
}

std::string grass_point_to_json(const GrassPoint& w) {
    json basis = json::array();
    for (Eigen::Index c = 0; c < w.basis().cols(); ++c) {
        json col = json::array();
        for (Eigen::Index r = 0; r < w.basis().rows(); ++r)
            col.push_back(json::array({w.basis()(r, c).real(), w.basis()(r, c).imag()}));
        basis.push_back(std::move(col));
    }
    const Window& win = w.window();
    return json{{"window", {{"lo", win.lo}, {"hi", win.hi}, {"d", win.d}}},
                {"rep", w.rep() == Rep::Adjoint ? "adjoint" : "fundamental"},
                {"n", w.n()},
                {"basis", std::move(basis)}}
        .dump();
}

GrassPoint grass_point_from_json(std::string_view text) {
    const json j = parse(text);
    return guarded([&] {
        const auto& jw = j.at("window");
        const Window win = Window::make(jw.at("lo").get<int>(), jw.at("hi").get<int>(), jw.at("d").get<int>());
        const std::string rep_name = j.at("rep").get<std::string>();
        if (rep_name != "adjoint" && rep_name != "fundamental") throw DomainError("grass JSON: unknown rep");
        const Rep rep = rep_name == "adjoint" ? Rep::Adjoint : Rep::Fundamental;
        const auto& jb = j.at("basis");
        CMatrix b(win.size(), static_cast<Eigen::Index>(jb.size()));
        for (size_t c = 0; c < jb.size(); ++c) {
            if (static_cast<int>(jb[c].size()) != win.size()) throw DomainError("grass JSON: column length");
            for (int r = 0; r < win.size(); ++r)
                b(r, static_cast<Eigen::Index>(c)) = {jb[c][static_cast<size_t>(r)].at(0).get<double>(),
                                                      jb[c][static_cast<size_t>(r)].at(1).get<double>()};
        }
        return GrassPoint::make(win, rep, j.at("n").get<int>(), std::move(b));
    });
}

}  // namespace loopconv

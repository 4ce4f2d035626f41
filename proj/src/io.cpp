#include "cohdist/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cohdist {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json extra_terms_json(const std::vector<std::pair<std::string, double>>& terms) {
    json obj = json::object();
    for (const auto& [k, v] : terms) obj[k] = v;
    return obj;
}

// splits one CSV line honoring RFC 4180 quoting
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

constexpr const char* kCsvHeader =
    "sample_id,d,channel,param,coherence,disturbance,extra_terms_json,residual,seed";

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            rows.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    return rows;
}

}  // namespace

std::string sweep_csv_string(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const SweepRecord& r : records) {
        out << r.sample_id << ',' << r.d << ',' << r.channel_label << ','
            << format_double(r.channel_param) << ',' << format_double(r.coherence) << ','
            << format_double(r.disturbance) << ','
            << csv_quote(extra_terms_json(r.extra_terms).dump()) << ','
            << format_double(r.residual) << ',' << r.seed << "\n";
    }
    return out.str();
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << sweep_csv_string(records);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<SweepRecord> read_sweep_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line)) return {};
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        throw FormatError("unexpected CSV header in " + path);
    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 9)
            throw FormatError("malformed CSV row (want 9 fields): " + line);
        try {
            SweepRecord r;
            r.sample_id = std::stol(f[0]);
            r.d = std::stoi(f[1]);
            r.channel_label = f[2];
            r.channel_param = std::stod(f[3]);
            r.coherence = std::stod(f[4]);
            r.disturbance = std::stod(f[5]);
            const json extras = json::parse(f[6]);
            for (auto it = extras.begin(); it != extras.end(); ++it)
                r.extra_terms.emplace_back(it.key(), it.value().get<double>());
            r.residual = std::stod(f[7]);
            r.seed = std::stoull(f[8]);
            records.push_back(std::move(r));
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw FormatError(std::string("malformed CSV row: ") + e.what());
        }
    }
    return records;
}

void write_sweep_meta(const std::string& csv_path, const SweepConfig& cfg) {
    json meta;
    meta["version"] = "cohdist 1.0.0";
    meta["config"] = {{"relation", relation_name(cfg.relation)},
                      {"channel", cfg.channel},
                      {"param_start", cfg.param_start},
                      {"param_stop", cfg.param_stop},
                      {"param_steps", cfg.param_steps},
                      {"dim", cfg.dim},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed},
                      {"basis", family_name(cfg.basis)},
                      {"er_mode", cfg.er_mode == EntanglementMode::certified ? "certified"
                                                                             : "variational"}};
    meta["solver"] = {{"discord_grid", 32},
                      {"simplex_tolerance", 1e-6},
                      {"er_restarts", 8},
                      {"er_descent_iterations", 250}};
    const std::string path = csv_path + ".meta.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << meta.dump(2) << "\n";
}

void write_counterexample(const std::string& path, const CounterexampleError& err) {
    json j;
    j["relation"] = relation_name(err.relation);
    j["lhs"] = err.lhs;
    j["bound"] = err.bound;
    j["sample_id"] = err.record.sample_id;
    j["seed"] = err.record.seed;
    j["state"] = matrix_to_json(err.state);
    j["state_dim"] = err.state.rows();
    json kraus = json::array();
    for (const Mat& k : err.channel.kraus) kraus.push_back(matrix_to_json(k));
    j["channel"] = {{"label", err.channel.label},
                    {"param", err.channel.param},
                    {"dim_in", err.channel.dim_in},
                    {"dim_out", err.channel.dim_out},
                    {"kraus", kraus}};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

DensityMatrix read_density_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("matrix"))
        throw FormatError("density JSON needs {\"dim\", \"matrix\"}");
    const int d = j["dim"].get<int>();
    if (d < 1 || d > 64) throw FormatError("density JSON: unreasonable dim");
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != static_cast<size_t>(d) * d)
        throw FormatError("density JSON: matrix must hold dim*dim [re, im] pairs");
    Mat m(d, d);
    for (int i = 0; i < d * d; ++i) {
        const json& cell = rows[i];
        if (!cell.is_array() || cell.size() != 2)
            throw FormatError("density JSON: each entry must be [re, im]");
        m(i / d, i % d) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
    try {
        return DensityMatrix(m);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("not a density matrix: ") + e.what());
    }
}

void write_density_json(const std::string& path, const Mat& rho) {
    json j;
    j["dim"] = rho.rows();
    j["matrix"] = matrix_to_json(rho);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

std::string render_scatter_svg(const std::vector<SweepRecord>& records) {
    const int width = 640, height = 480;
    const double mx = 60, my = 40;  // margins
    const double pw = width - 2 * mx, ph = height - 2 * my;

    double xmax = 1.0, ymax = 2.0;
    std::vector<std::pair<double, double>> lines;  // (bound, k)
    for (const SweepRecord& r : records) {
        xmax = std::max(xmax, r.coherence);
        ymax = std::max(ymax, r.disturbance);
        double bound = 0.0, k = 0.0;
        for (const auto& [key, v] : r.extra_terms) {
            if (key == "bound") bound = v;
            if (key == "k") k = v;
        }
        if (bound > 0.0 && k > 0.0) {
            const std::pair<double, double> bk{bound, k};
            if (std::find(lines.begin(), lines.end(), bk) == lines.end()) lines.push_back(bk);
            ymax = std::max(ymax, bound);
        }
    }
    xmax *= 1.05;
    ymax *= 1.05;

    auto px = [&](double x) { return mx + x / xmax * pw; };
    auto py = [&](double y) { return height - my - y / ymax * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax) << "\" y2=\""
        << py(0) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\""
        << py(ymax) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = xmax * t / 4.0, yv = ymax * t / 4.0;
        svg << "<text x=\"" << px(xv) << "\" y=\"" << py(0) + 18
            << "\" font-size=\"11\" text-anchor=\"middle\">" << std::round(xv * 100) / 100
            << "</text>\n";
        svg << "<text x=\"" << px(0) - 8 << "\" y=\"" << py(yv) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << std::round(yv * 100) / 100
            << "</text>\n";
    }
    svg << "<text x=\"" << px(xmax / 2) << "\" y=\"" << height - 8
        << "\" font-size=\"13\" text-anchor=\"middle\">coherence (bits)</text>\n";
    svg << "<text x=\"16\" y=\"" << py(ymax / 2)
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << py(ymax / 2)
        << ")\">disturbance (bits)</text>\n";

    for (const auto& [bound, k] : lines) {
        // D = bound - k C between its axis intercepts, clipped to the view
        double x0 = 0.0, y0 = bound, x1 = bound / k, y1 = 0.0;
        if (y0 > ymax) {
            y0 = ymax;
            x0 = (bound - ymax) / k;
        }
        if (x1 > xmax) {
            x1 = xmax;
            y1 = bound - k * xmax;
        }
        svg << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1)
            << "\" y2=\"" << py(y1)
            << "\" stroke=\"crimson\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (const SweepRecord& r : records)
        svg << "<circle cx=\"" << px(r.coherence) << "\" cy=\"" << py(r.disturbance)
            << "\" r=\"2\" fill=\"steelblue\" fill-opacity=\"0.45\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cohdist

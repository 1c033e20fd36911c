#include "qkr/io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qkr {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_angle(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("angle: empty value");
    std::string body = text;
    bool with_pi = false;
    if (body.size() >= 2 && body.substr(body.size() - 2) == "pi") {
        with_pi = true;
        body = body.substr(0, body.size() - 2);
        if (body.empty() || body == "+" || body == "-") body += "1";
    }
    size_t consumed = 0;
    double value;
    try {
        value = std::stod(body, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("angle: cannot parse '" + text + "'");
    }
    if (consumed != body.size())
        throw std::invalid_argument("angle: cannot parse '" + text + "'");
    return with_pi ? value * std::numbers::pi : value;
}

std::pair<int, int> parse_rational(const std::string& text) {
    const auto parse_int = [&](const std::string& part, const char* what) {
        size_t consumed = 0;
        int value;
        try {
            value = std::stoi(part, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("pq: cannot parse ") + what + " in '" + text + "'");
        }
        if (consumed != part.size())
            throw std::invalid_argument(std::string("pq: cannot parse ") + what + " in '" + text + "'");
        return value;
    };

    int p, q;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        p = parse_int(text, "p");
        q = 1;
    } else {
        p = parse_int(text.substr(0, slash), "p");
        q = parse_int(text.substr(slash + 1), "q");
    }
    if (p <= 0 || q <= 0) throw std::invalid_argument("pq: p and q must be positive");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("pq: p/q not in lowest terms");
    return {p, q};
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string part = text.substr(pos, comma - pos);
        size_t consumed = 0;
        double v;
        try {
            v = std::stod(part, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("list: cannot parse '" + part + "'");
        }
        if (consumed != part.size())
            throw std::invalid_argument("list: cannot parse '" + part + "'");
        values.push_back(v);
        pos = comma + 1;
    }
    if (values.empty()) throw std::invalid_argument("list: empty");
    return values;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

void write_provenance(std::ofstream& out, const Provenance& provenance) {
    for (const auto& [key, value] : provenance) out << "# " << key << ": " << value << "\n";
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace

void write_moments_csv(const std::string& path, const MomentSeries& series,
                       const Provenance& provenance) {
    auto out = open_out(path);
    write_provenance(out, provenance);
    out << "n,m1,m2,variance,norm,tail_mass\n";
    for (const auto& e : series.entries)
        out << e.n << ',' << format_double(e.m1) << ',' << format_double(e.m2) << ','
            << format_double(e.variance) << ',' << format_double(e.norm) << ','
            << format_double(e.tail_mass) << '\n';
    finish(out, path);
}

void write_snapshots_csv(const std::string& path, const std::vector<SnapshotPoint>& points,
                         const Provenance& provenance) {
    auto out = open_out(path);
    write_provenance(out, provenance);
    out << "t,l,p\n";
    for (const auto& pt : points)
        out << pt.t << ',' << pt.l << ',' << format_double(pt.p) << '\n';
    finish(out, path);
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records,
                     const Provenance& provenance) {
    auto out = open_out(path);
    write_provenance(out, provenance);
    const std::string variable = records.empty() ? "value" : records.front().variable;
    out << variable << ",vg,stderr,residual_rms,n_min,n_max\n";
    for (const auto& r : records)
        out << format_double(r.value) << ',' << format_double(r.fit.slope) << ','
            << format_double(r.fit.stderr_slope) << ',' << format_double(r.fit.residual_rms)
            << ',' << r.fit.n_min << ',' << r.fit.n_max << '\n';
    finish(out, path);
}

void write_figure1_csv(const std::string& path,
                       const std::vector<VarianceCoefficientPoint>& points,
                       const Provenance& provenance) {
    auto out = open_out(path);
    write_provenance(out, provenance);
    out << "sigma0,theta0,coefficient\n";
    for (const auto& pt : points)
        out << format_double(pt.sigma0) << ',' << format_double(pt.theta0) << ','
            << format_double(pt.coefficient) << '\n';
    finish(out, path);
}

} // namespace qkr

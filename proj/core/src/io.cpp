#include "grushin/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace grushin::io {

HeaderError::HeaderError(const std::string& path, const std::string& field, const std::string& what)
    : IoError(path + ": header field '" + field + "' " + what), field_(field)
{
}

RowCountError::RowCountError(const std::string& path, std::size_t expected, std::size_t found)
    : IoError(path + ": expected " + std::to_string(expected) + " data rows, found " + std::to_string(found))
{
}

ValueError::ValueError(const std::string& path, std::size_t line, const std::string& what)
    : IoError(path + ":" + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep))
        out.push_back(trim(item));
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

struct Record {
    std::size_t line;
    std::vector<std::string> fields;
};

// header lines, then data records; a first non-numeric record is a column-name row and is skipped
struct Parsed {
    std::string path;
    Header header;
    std::vector<Record> rows;
};

bool parse_key_value(const std::string& text, Header& out)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        return false;
    out[trim(text.substr(0, eq))] = trim(text.substr(eq + 1));
    return true;
}

Parsed parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(path + ": cannot open for reading");
    Parsed p{path, {}, {}};
    std::string line;
    std::size_t no = 0;
    bool names_seen = false;
    while (std::getline(in, line)) {
        ++no;
        const std::string t = trim(line);
        if (t.empty())
            continue;
        if (t[0] == '#') {
            parse_key_value(t.substr(1), p.header);
            continue;
        }
        auto fields = split(t, ',');
        if (!names_seen && p.rows.empty()) {
            names_seen = true;
            bool numeric = true;
            try {
                parse_real(fields.front());
            } catch (const std::invalid_argument&) {
                numeric = false;
            }
            if (!numeric)
                continue;
        }
        p.rows.push_back({no, std::move(fields)});
    }
    return p;
}

const std::string& field(const Parsed& p, const std::string& key)
{
    const auto it = p.header.find(key);
    if (it == p.header.end())
        throw HeaderError(p.path, key, "is missing");
    return it->second;
}

double header_real(const Parsed& p, const std::string& key)
{
    try {
        const double x = parse_real(field(p, key));
        if (!std::isfinite(x))
            throw std::invalid_argument("non-finite");
        return x;
    } catch (const std::invalid_argument&) {
        throw HeaderError(p.path, key, "is not a finite real");
    }
}

long header_count(const Parsed& p, const std::string& key)
{
    const std::string& v = field(p, key);
    long n = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || ptr != v.data() + v.size() || n < 0)
        throw HeaderError(p.path, key, "is not a non-negative integer");
    return n;
}

std::vector<double> header_list(const Parsed& p, const std::string& key)
{
    std::vector<double> out;
    for (const auto& item : split(field(p, key), ',')) {
        try {
            out.push_back(parse_real(item));
        } catch (const std::invalid_argument&) {
            throw HeaderError(p.path, key, "has an unparsable entry '" + item + "'");
        }
        if (!std::isfinite(out.back()))
            throw HeaderError(p.path, key, "has a non-finite entry");
    }
    return out;
}

TypePair header_types(const Parsed& p)
{
    const double a = header_real(p, "alpha");
    const double b = header_real(p, "beta");
    if (!(a > -1.0) || !(b > -1.0))
        throw ParameterError(p.path + ": alpha and beta must be > -1");
    return {a, b};
}

double cell(const Parsed& p, const Record& rec, std::size_t k)
{
    if (k >= rec.fields.size())
        throw ValueError(p.path, rec.line, "too few columns");
    double x = 0.0;
    try {
        x = parse_real(rec.fields[k]);
    } catch (const std::invalid_argument&) {
        throw ValueError(p.path, rec.line, "unparsable entry '" + rec.fields[k] + "'");
    }
    if (!std::isfinite(x))
        throw ValueError(p.path, rec.line, "non-finite entry");
    return x;
}

void check_columns(const Parsed& p, std::size_t ncols)
{
    for (const auto& rec : p.rows)
        if (rec.fields.size() != ncols)
            throw ValueError(p.path, rec.line, "expected " + std::to_string(ncols) + " columns");
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError(path + ": cannot open for writing");
    return out;
}

void write_header(std::ostream& os, const Header& header)
{
    for (const auto& [k, v] : header)
        os << "# " << k << '=' << v << '\n';
}

std::string join(const std::vector<double>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        out += format_real(xs[i]);
    }
    return out;
}

void finish(std::ofstream& out, const std::string& path)
{
    out.flush();
    if (!out)
        throw IoError(path + ": write failed");
}

}  // namespace

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

double parse_real(const std::string& text)
{
    const std::string t = trim(text);
    const char* b = t.data();
    const char* e = t.data() + t.size();
    if (b != e && *b == '+')
        ++b;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(b, e, x);
    if (ec != std::errc() || ptr != e || b == e)
        throw std::invalid_argument("not a real: " + t);
    return x;
}

void write_grid(const std::string& path, const GridFile& gf)
{
    gf.grid.validate();
    auto out = open_out(path);
    write_header(out, {{"format", "grid"},
                       {"alpha", format_real(gf.tp.alpha.value())},
                       {"beta", format_real(gf.tp.beta.value())},
                       {"nr", std::to_string(gf.grid.r_nodes.size())},
                       {"ns", std::to_string(gf.grid.s_nodes.size())}});
    out << "r,s,value\n";
    for (std::size_t i = 0; i < gf.grid.r_nodes.size(); ++i)
        for (std::size_t j = 0; j < gf.grid.s_nodes.size(); ++j)
            out << format_real(gf.grid.r_nodes[i]) << ',' << format_real(gf.grid.s_nodes[j]) << ','
                << format_real(gf.grid(i, j)) << '\n';
    finish(out, path);
}

GridFile read_grid(const std::string& path)
{
    const Parsed p = parse_file(path);
    const long nr = header_count(p, "nr");
    const long ns = header_count(p, "ns");
    GridFile gf;
    gf.tp = header_types(p);
    const std::size_t expected = static_cast<std::size_t>(nr) * static_cast<std::size_t>(ns);
    if (p.rows.size() != expected)
        throw RowCountError(path, expected, p.rows.size());
    check_columns(p, 3);
    gf.grid = GridFunction2D::zeros(std::vector<double>(nr), std::vector<double>(ns));
    for (std::size_t k = 0; k < expected; ++k) {
        const Record& rec = p.rows[k];
        const std::size_t i = k / ns;
        const std::size_t j = k % ns;
        const double r = cell(p, rec, 0);
        const double s = cell(p, rec, 1);
        gf.grid.values(i, j) = cell(p, rec, 2);
        if (j == 0)
            gf.grid.r_nodes[i] = r;
        if (i == 0)
            gf.grid.s_nodes[j] = s;
        if (r != gf.grid.r_nodes[i] || s != gf.grid.s_nodes[j])
            throw ValueError(path, rec.line, "row does not follow the r-major tensor layout");
    }
    try {
        gf.grid.validate();
    } catch (const GridError& e) {
        throw ValueError(path, p.rows.front().line, e.what());
    }
    return gf;
}

void write_spectral(const std::string& path, const SpectralData& sd)
{
    sd.validate();
    auto out = open_out(path);
    write_header(out, {{"format", "spectral"},
                       {"alpha", format_real(sd.tp.alpha.value())},
                       {"beta", format_real(sd.tp.beta.value())},
                       {"n_max", std::to_string(sd.n_max)},
                       {"n_tau", std::to_string(sd.tau_grid.size())},
                       {"tau", join(sd.tau_grid)},
                       {"tau_weights", join(sd.tau_weights)}});
    out << "n,tau_index,value\n";
    for (int n = 0; n < sd.n_max; ++n)
        for (std::size_t k = 0; k < sd.tau_grid.size(); ++k)
            out << n << ',' << k << ',' << format_real(sd.values(n, k)) << '\n';
    finish(out, path);
}

SpectralData read_spectral(const std::string& path)
{
    const Parsed p = parse_file(path);
    SpectralData sd;
    sd.tp = header_types(p);
    const long n_max = header_count(p, "n_max");
    if (n_max < 1)
        throw ParameterError(path + ": n_max must be >= 1");
    sd.n_max = static_cast<int>(n_max);
    const long n_tau = header_count(p, "n_tau");
    sd.tau_grid = header_list(p, "tau");
    sd.tau_weights = header_list(p, "tau_weights");
    if (sd.tau_grid.size() != static_cast<std::size_t>(n_tau))
        throw HeaderError(path, "tau", "does not have n_tau entries");
    if (sd.tau_weights.size() != static_cast<std::size_t>(n_tau))
        throw HeaderError(path, "tau_weights", "does not have n_tau entries");
    const std::size_t expected = static_cast<std::size_t>(n_max) * static_cast<std::size_t>(n_tau);
    if (p.rows.size() != expected)
        throw RowCountError(path, expected, p.rows.size());
    check_columns(p, 3);
    sd.values = Matrix(n_max, n_tau);
    for (std::size_t k = 0; k < expected; ++k) {
        const Record& rec = p.rows[k];
        const double n = cell(p, rec, 0);
        const double j = cell(p, rec, 1);
        if (n != static_cast<double>(k / n_tau) || j != static_cast<double>(k % n_tau))
            throw ValueError(path, rec.line, "row does not follow the n-major layout");
        sd.values(k / n_tau, k % n_tau) = cell(p, rec, 2);
    }
    try {
        sd.validate();
    } catch (const std::exception& e) {
        throw ValueError(path, p.rows.empty() ? 0 : p.rows.front().line, e.what());
    }
    return sd;
}

std::vector<Point> read_points(const std::string& path)
{
    const Parsed p = parse_file(path);
    if (p.rows.empty())
        throw RowCountError(path, 1, 0);
    std::vector<Point> pts;
    pts.reserve(p.rows.size());
    for (const auto& rec : p.rows) {
        const double r = cell(p, rec, 0);
        const double s = cell(p, rec, 1);
        if (r < 0.0 || s < 0.0)
            throw ValueError(path, rec.line, "points must lie in the closed quarter plane");
        pts.push_back({r, s});
    }
    return pts;
}

void write_points(const std::string& path, std::span<const Point> points)
{
    auto out = open_out(path);
    write_header(out, {{"format", "points"}});
    out << "r,s\n";
    for (const Point& p : points)
        out << format_real(p.r) << ',' << format_real(p.s) << '\n';
    finish(out, path);
}

void write_point_values(const std::string& path, const Header& header, std::span<const Point> points,
                        std::span<const double> values)
{
    if (points.size() != values.size())
        throw IoError(path + ": points and values differ in length");
    auto out = open_out(path);
    write_header(out, header);
    out << "r,s,value\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << format_real(points[i].r) << ',' << format_real(points[i].s) << ',' << format_real(values[i]) << '\n';
    finish(out, path);
}

void write_columns(const std::string& path, const Header& header, const std::vector<std::string>& names,
                   const std::vector<std::vector<double>>& columns)
{
    if (names.size() != columns.size() || columns.empty())
        throw IoError(path + ": column names do not match columns");
    for (const auto& c : columns)
        if (c.size() != columns.front().size())
            throw IoError(path + ": columns differ in length");
    auto out = open_out(path);
    write_header(out, header);
    for (std::size_t k = 0; k < names.size(); ++k)
        out << (k ? "," : "") << names[k];
    out << '\n';
    for (std::size_t i = 0; i < columns.front().size(); ++i) {
        for (std::size_t k = 0; k < columns.size(); ++k)
            out << (k ? "," : "") << format_real(columns[k][i]);
        out << '\n';
    }
    finish(out, path);
}

Header read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(path + ": cannot open for reading");
    Header h;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string t = trim(line);
        if (!t.empty() && t[0] == '#') {
            t = trim(t.substr(1));
            // '#' lines without '=' are comments
            if (t.find('=') == std::string::npos)
                continue;
        }
        if (t.empty())
            continue;
        if (!parse_key_value(t, h))
            throw ValueError(path, no, "expected key=value");
    }
    return h;
}

}  // namespace grushin::io

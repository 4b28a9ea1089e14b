#include "cliquebetti/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cliquebetti {

using nlohmann::json;

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{})
        raise(ErrorCode::Internal, "failed to format double");
    return std::string(buf, ptr);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorCode::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_text_file(path)); }

std::string format_edge_list(const Graph& g) {
    std::string out = "# n=" + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string cliques_to_csv(const CliqueList& list) {
    std::string out;
    for (const auto& clique : list.cliques) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(clique[i]);
        }
        out += '\n';
    }
    return out;
}

std::string cliques_to_json(const CliqueList& list) {
    json arr = json::array();
    for (const auto& clique : list.cliques) arr.push_back(clique);
    json doc;
    doc["k"] = list.k;
    doc["count"] = list.count();
    doc["source"] = clique_strategy_name(list.source);
    doc["cliques"] = std::move(arr);
    return doc.dump();
}

std::string boundary_to_triplets(const BoundaryMatrix& m) {
    std::string out = std::to_string(m.r()) + " " + std::to_string(m.n()) + " " +
                      std::to_string(m.cols()) + "\n";
    for (const auto& e : m.entries())
        out += std::to_string(e.row) + " " + std::to_string(e.col) + " " +
               std::to_string(e.sign) + "\n";
    return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos ? text.substr(pos)
                                                              : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_on(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        out.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_double_or_throw(std::string_view token, std::int64_t line_no) {
    token = trim(token);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        raise(ErrorCode::Parse,
              "line " + std::to_string(line_no) + ": cannot parse number '" +
                  std::string(token) + "'");
    return value;
}

std::int64_t parse_int_or_throw(std::string_view token, std::int64_t line_no) {
    token = trim(token);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        raise(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                    ": cannot parse integer '" + std::string(token) + "'");
    return value;
}

} // namespace

BoundaryMatrix boundary_from_triplets(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty())
        raise(ErrorCode::Parse, "empty boundary triplet text");
    auto header = split_on(lines[0], ' ');
    std::vector<std::string_view> fields;
    for (auto f : header)
        if (!trim(f).empty()) fields.push_back(trim(f));
    if (fields.size() != 3)
        raise(ErrorCode::Parse, "boundary header must be 'r n |S_r|'");
    const int r = static_cast<int>(parse_int_or_throw(fields[0], 1));
    const std::int64_t n = parse_int_or_throw(fields[1], 1);
    const std::int64_t cols = parse_int_or_throw(fields[2], 1);

    std::vector<BoundaryEntry> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        auto toks = split_on(lines[i], ' ');
        std::vector<std::string_view> vals;
        for (auto t : toks)
            if (!trim(t).empty()) vals.push_back(trim(t));
        if (vals.size() != 3)
            raise(ErrorCode::Parse,
                  "line " + std::to_string(i + 1) + ": expected 'row col sign'");
        BoundaryEntry e;
        e.row = parse_int_or_throw(vals[0], static_cast<std::int64_t>(i) + 1);
        e.col = parse_int_or_throw(vals[1], static_cast<std::int64_t>(i) + 1);
        e.sign = static_cast<int>(parse_int_or_throw(vals[2], static_cast<std::int64_t>(i) + 1));
        entries.push_back(e);
    }
    const std::int64_t rows = r == 0 ? 0 : binomial_checked(n, r);
    return BoundaryMatrix(r, n, rows, cols, std::move(entries));
}

ImageGrid parse_image_csv(std::string_view text) {
    const auto lines = split_lines(text);
    ImageGrid img;
    std::vector<double> values;
    std::int64_t rows = 0;
    std::int64_t cols = -1;
    std::int64_t line_no = 0;
    for (auto line : lines) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_on(line, ',');
        if (cols < 0)
            cols = static_cast<std::int64_t>(cells.size());
        else if (static_cast<std::int64_t>(cells.size()) != cols)
            raise(ErrorCode::Parse,
                  "line " + std::to_string(line_no) + ": ragged row in image CSV");
        for (auto cell : cells) values.push_back(parse_double_or_throw(cell, line_no));
        ++rows;
    }
    if (rows == 0 || rows != cols)
        raise(ErrorCode::Parse, "image CSV must be a square grid, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    img.side = static_cast<int>(rows);
    img.intensities = std::move(values);
    img.validate();
    return img;
}

ImageGrid parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        raise(ErrorCode::Parse, "not a PGM file (expected P2 or P5 magic)");
    const bool binary = bytes[1] == '5';

    // Tokenized header: magic, width, height, maxval; '#' comments allowed.
    std::size_t pos = 2;
    auto next_token = [&]() -> std::string {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
        std::size_t start = pos;
        while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos])))
            ++pos;
        if (start == pos) raise(ErrorCode::Parse, "truncated PGM header");
        return std::string(bytes.substr(start, pos - start));
    };
    const std::int64_t width = std::stoll(next_token());
    const std::int64_t height = std::stoll(next_token());
    const std::int64_t maxval = std::stoll(next_token());
    if (width != height)
        raise(ErrorCode::Parse, "PGM image must be square");
    if (maxval != 255)
        raise(ErrorCode::Unsupported, "only 8-bit PGM (maxval 255) is supported");

    ImageGrid img;
    img.side = static_cast<int>(width);
    img.intensities.reserve(static_cast<std::size_t>(width * height));
    if (binary) {
        ++pos; // single whitespace after maxval
        if (pos + static_cast<std::size_t>(width * height) > bytes.size())
            raise(ErrorCode::Parse, "truncated P5 pixel data");
        for (std::int64_t i = 0; i < width * height; ++i)
            img.intensities.push_back(
                static_cast<double>(static_cast<unsigned char>(bytes[pos + static_cast<std::size_t>(i)])) /
                255.0);
    } else {
        for (std::int64_t i = 0; i < width * height; ++i)
            img.intensities.push_back(static_cast<double>(std::stoll(next_token())) / 255.0);
    }
    img.validate();
    return img;
}

ImageGrid load_image(const std::string& path) {
    const std::string bytes = read_text_file(path);
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5'))
        return parse_pgm(bytes);
    return parse_image_csv(bytes);
}

PointCloud parse_points_csv(std::string_view text) {
    const auto lines = split_lines(text);
    PointCloud pc;
    std::int64_t line_no = 0;
    for (auto line : lines) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_on(line, ',');
        std::vector<double> point;
        point.reserve(cells.size());
        for (auto cell : cells) point.push_back(parse_double_or_throw(cell, line_no));
        if (pc.dim == 0)
            pc.dim = static_cast<int>(point.size());
        else if (static_cast<int>(point.size()) != pc.dim)
            raise(ErrorCode::Parse,
                  "line " + std::to_string(line_no) + ": inconsistent point dimension");
        pc.points.push_back(std::move(point));
    }
    if (pc.points.empty())
        raise(ErrorCode::Parse, "point cloud CSV holds no points");
    pc.validate();
    return pc;
}

PointCloud load_points(const std::string& path) { return parse_points_csv(read_text_file(path)); }

DensityMatrix parse_state_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorCode::Parse, std::string("state JSON: ") + e.what());
    }
    if (!doc.contains("num_subsystems"))
        raise(ErrorCode::Parse, "state JSON is missing num_subsystems");
    const int n = doc["num_subsystems"].get<int>();
    std::vector<int> dims(static_cast<std::size_t>(n), 2);
    if (doc.contains("local_dims")) {
        dims = doc["local_dims"].get<std::vector<int>>();
        if (static_cast<int>(dims.size()) != n)
            raise(ErrorCode::Parse, "local_dims length does not match num_subsystems");
    }
    if (!doc.contains("real"))
        raise(ErrorCode::Parse, "state JSON is missing the real matrix");
    const auto real = doc["real"].get<std::vector<std::vector<double>>>();
    std::vector<std::vector<double>> imag;
    if (doc.contains("imag"))
        imag = doc["imag"].get<std::vector<std::vector<double>>>();

    const std::int64_t dim = static_cast<std::int64_t>(real.size());
    Eigen::MatrixXcd rho(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        if (static_cast<std::int64_t>(real[static_cast<std::size_t>(i)].size()) != dim)
            raise(ErrorCode::Parse, "real matrix is not square");
        for (std::int64_t j = 0; j < dim; ++j) {
            const double re = real[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            double im = 0.0;
            if (!imag.empty()) {
                if (static_cast<std::int64_t>(imag.size()) != dim ||
                    static_cast<std::int64_t>(imag[static_cast<std::size_t>(i)].size()) != dim)
                    raise(ErrorCode::Parse, "imag matrix shape mismatch");
                im = imag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            rho(i, j) = std::complex<double>(re, im);
        }
    }
    return DensityMatrix(std::move(dims), std::move(rho));
}

namespace {

// "name", "name(arg)" or "name(arg1,arg2)"
bool parse_constructor(const std::string& spec, std::string& name,
                       std::vector<std::int64_t>& args) {
    const std::size_t open = spec.find('(');
    if (open == std::string::npos) {
        name = spec;
        return !name.empty() && name.find('.') == std::string::npos &&
               name.find('/') == std::string::npos;
    }
    if (spec.back() != ')') return false;
    name = spec.substr(0, open);
    const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    for (auto tok : split_on(inner, ',')) {
        tok = trim(tok);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) return false;
        args.push_back(v);
    }
    return true;
}

} // namespace

DensityMatrix load_state(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe.good())
        return parse_state_json(read_text_file(spec));

    std::string name;
    std::vector<std::int64_t> args;
    if (!parse_constructor(spec, name, args))
        raise(ErrorCode::Io, "state spec '" + spec + "' is neither a readable file nor a "
                             "constructor (bell, ghz(N), product(N), random_pure(N, seed))");
    if (name == "bell" && args.empty()) return DensityMatrix::bell();
    if (name == "ghz" && args.size() == 1)
        return DensityMatrix::ghz(static_cast<int>(args[0]));
    if (name == "product" && args.size() == 1)
        return DensityMatrix::product_zero(static_cast<int>(args[0]));
    if (name == "random_pure" && args.size() == 2)
        return DensityMatrix::random_pure(static_cast<int>(args[0]),
                                          static_cast<std::uint64_t>(args[1]));
    raise(ErrorCode::InvalidArgument,
          "unknown state constructor '" + spec +
              "'; expected bell, ghz(N), product(N) or random_pure(N, seed)");
}

std::string curve_to_csv(const BettiCurve& curve) {
    std::string out = "threshold,s_r,s_r1,normalized,absolute,stderr\n";
    for (const auto& s : curve.samples) {
        out += format_double(s.threshold) + "," + std::to_string(s.s_r) + "," +
               std::to_string(s.s_r1) + "," + format_double(s.normalized) + "," +
               format_double(s.absolute) + "," + format_double(s.stderr_) + "\n";
    }
    return out;
}

std::string curve_to_json(const BettiCurve& curve) {
    json doc;
    doc["r"] = curve.r;
    json samples = json::array();
    for (const auto& s : curve.samples) {
        json row;
        row["threshold"] = s.threshold;
        row["s_r"] = s.s_r;
        row["s_r1"] = s.s_r1;
        row["normalized"] = s.normalized;
        row["absolute"] = s.absolute;
        row["stderr"] = s.stderr_;
        samples.push_back(std::move(row));
    }
    doc["samples"] = std::move(samples);
    return doc.dump();
}

} // namespace cliquebetti

#include "foldrib/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/tokenizer.hpp>

namespace foldrib {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

PlanarDiagram parse_pd(const std::string& raw, const ParseOptions& options) {
    std::string text = trim(raw);
    if (text.rfind("PD[", 0) == 0 || text.rfind("PD(", 0) == 0) {
        char close = text[2] == '[' ? ']' : ')';
        if (text.back() != close) throw Error(ErrorCode::SyntaxError, "unterminated PD wrapper");
        text = text.substr(3, text.size() - 4);
    }

    PlanarDiagram d;
    std::size_t i = 0;
    auto skip_separators = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    skip_separators();
    while (i < text.size()) {
        const std::size_t token_start = i;
        if (text[i] != 'X') throw Error(ErrorCode::SyntaxError, "expected X at offset " + std::to_string(i));
        ++i;
        if (i >= text.size() || (text[i] != '(' && text[i] != '['))
            throw Error(ErrorCode::SyntaxError, "expected ( after X at offset " + std::to_string(token_start));
        const char close = text[i] == '(' ? ')' : ']';
        const std::size_t end = text.find(close, i);
        if (end == std::string::npos) throw Error(ErrorCode::SyntaxError, "unterminated token at offset " + std::to_string(token_start));
        const std::string body = text.substr(i + 1, end - i - 1);
        std::vector<EdgeId> labels;
        std::stringstream parts(body);
        std::string part;
        while (std::getline(parts, part, ',')) {
            part = trim(part);
            if (part.empty() || !std::all_of(part.begin(), part.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                throw Error(ErrorCode::SyntaxError, "bad edge label '" + part + "' in " + text.substr(token_start, end - token_start + 1));
            labels.push_back(std::stoi(part));
        }
        if (labels.size() != 4)
            throw Error(ErrorCode::SyntaxError, "crossing " + text.substr(token_start, end - token_start + 1) + " needs 4 labels");
        Crossing c;
        c.id = d.crossing_count();
        std::copy(labels.begin(), labels.end(), c.slots.begin());
        c.over_pair = 1;
        d.crossings.push_back(c);
        i = end + 1;
        skip_separators();
    }

    if (d.crossings.empty()) {
        if (!options.allow_unknot) throw Error(ErrorCode::EmptyDiagram, "empty PD code (pass --allow-unknot for the unknot)");
        d.free_loops = 1;
        return d;
    }

    std::map<EdgeId, int> uses;
    for (const auto& c : d.crossings) {
        for (EdgeId e : c.slots) {
            if (e <= 0) throw Error(ErrorCode::LabelError, "edge labels must be positive");
            ++uses[e];
        }
    }
    for (auto [e, count] : uses) {
        if (count != 2)
            throw Error(ErrorCode::LabelError, "edge " + std::to_string(e) + " appears " + std::to_string(count) + " times");
    }
    return d;
}

std::string emit_pd(const PlanarDiagram& d) {
    std::ostringstream out;
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& c = d.crossings[k];
        std::array<EdgeId, 4> s = c.slots;
        if (c.over_pair == 0) s = {c.slots[1], c.slots[2], c.slots[3], c.slots[0]};
        if (k) out << ' ';
        out << "X(" << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << ')';
    }
    return out.str();
}

std::vector<int> detect_nugatory(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    if (n == 0) return {};
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(n);
    std::vector<bool> flagged(n, false);
    for (const auto& pair : edge_ends(d)) {
        if (pair[0].crossing < 0) continue;
        if (pair[0].crossing == pair[1].crossing) {
            flagged[pair[0].crossing] = true;
        } else {
            boost::add_edge(pair[0].crossing, pair[1].crossing, g);
        }
    }
    std::vector<Graph::vertex_descriptor> cuts;
    boost::articulation_points(g, std::back_inserter(cuts));
    for (auto v : cuts) flagged[v] = true;
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (flagged[v]) out.push_back(d.crossings[v].id);
    }
    return out;
}

void require_pipeline_input(const PlanarDiagram& d) {
    auto check = validate_diagram(d);
    if (!check.ok) {
        auto [issue, message] = check.issues.front();
        if (issue == ValidationIssue::Disconnected)
            throw Error(ErrorCode::PreconditionViolated,
                        "split diagram (" + message + "); run each component separately");
        ErrorCode code = issue == ValidationIssue::DanglingEdge ? ErrorCode::DanglingEdge
                         : issue == ValidationIssue::BadArity   ? ErrorCode::BadArity
                                                                : ErrorCode::NonPlanar;
        throw Error(code, message);
    }
    auto nugatory = detect_nugatory(d);
    if (!nugatory.empty()) {
        std::string ids;
        for (int v : nugatory) ids += (ids.empty() ? "" : ", ") + std::to_string(v);
        throw Error(ErrorCode::PreconditionViolated, "nugatory crossings: " + ids);
    }
}

KnotTable parse_table(const std::string& csv_text) {
    KnotTable table;
    std::istringstream in(csv_text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        std::vector<std::string> fields;
        try {
            Tokenizer tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
            for (const auto& f : tok) fields.push_back(trim(f));
        } catch (const boost::escaped_list_error& e) {
            table.errors.push_back({line_no, ErrorCode::SyntaxError, e.what()});
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (fields != std::vector<std::string>{"name", "crossings", "pd"}) {
                table.errors.push_back({line_no, ErrorCode::SyntaxError, "header must be name,crossings,pd"});
                return table;
            }
            continue;
        }
        if (fields.size() != 3) {
            table.errors.push_back({line_no, ErrorCode::SyntaxError, "expected 3 fields, got " + std::to_string(fields.size())});
            continue;
        }
        KnotTableEntry entry;
        entry.line = line_no;
        entry.name = fields[0];
        entry.pd_text = fields[2];
        try {
            std::size_t used = 0;
            entry.crossing_number = std::stoi(fields[1], &used);
            if (used != fields[1].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            table.errors.push_back({line_no, ErrorCode::SyntaxError, "crossings field '" + fields[1] + "' is not an integer"});
            continue;
        }
        try {
            entry.diagram = parse_pd(entry.pd_text);
            auto check = validate_diagram(entry.diagram);
            if (!check.ok) throw Error(ErrorCode::LabelError, check.issues.front().second);
            if (entry.diagram.crossing_count() != entry.crossing_number)
                throw Error(ErrorCode::CountMismatch, "row says " + std::to_string(entry.crossing_number) + " crossings, pd has " +
                                                          std::to_string(entry.diagram.crossing_count()));
        } catch (const Error& e) {
            table.errors.push_back({line_no, e.code(), entry.name + ": " + e.what()});
            continue;
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

KnotTable load_table(const std::string& path) {
    return parse_table(read_file(path));
}

std::string emit_bgd(const BinaryGridDiagram& g) {
    std::ostringstream out;
    for (const auto& r : g.rows) {
        switch (r.shape()) {
            case Shape::Min: out << "MIN"; break;
            case Shape::Trans: out << "TRANS"; break;
            case Shape::Max: out << "MAX"; break;
        }
        if (r.crossed_column) out << " X@" << *r.crossed_column;
        auto kind = [](EndKind k) { return k == EndKind::Up ? "up" : "down"; };
        out << " extent=[" << r.left << ',' << r.right << "] ends=(" << kind(r.left_end) << ',' << kind(r.right_end) << ")\n";
    }
    return out.str();
}

BinaryGridDiagram parse_bgd(const std::string& text) {
    static const std::regex row_re(
        R"(^\s*(MIN|TRANS|MAX)(?:\s+X@(-?\d+))?\s+extent=\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s+ends=\(\s*(up|down)\s*,\s*(up|down)\s*\)\s*$)");
    std::vector<Row> rows;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::smatch m;
        if (!std::regex_match(t, m, row_re))
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": malformed row '" + t + "'");
        Row r;
        if (m[2].matched) r.crossed_column = std::stoi(m[2]);
        r.left = std::stoi(m[3]);
        r.right = std::stoi(m[4]);
        r.left_end = m[5] == "up" ? EndKind::Up : EndKind::Down;
        r.right_end = m[6] == "up" ? EndKind::Up : EndKind::Down;
        Shape declared = m[1] == "MIN" ? Shape::Min : m[1] == "TRANS" ? Shape::Trans : Shape::Max;
        if (declared != r.shape())
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": shape does not match the end kinds");
        rows.push_back(r);
    }
    return with_derived_columns(std::move(rows));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace foldrib

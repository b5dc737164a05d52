#include "heaps/trace.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace heaps {

namespace {

void write_ops(std::ostringstream& os, const std::vector<TraceOp>& ops, int depth) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    for (const TraceOp& op : ops) {
        switch (op.kind) {
            case TraceOp::Kind::Insert:
                os << indent << "i " << op.key << '\n';
                break;
            case TraceOp::Kind::ExtractMin:
                os << indent << "x\n";
                break;
            case TraceOp::Kind::DecreaseKey:
                os << indent << "d " << op.ordinal << ' ' << op.key << '\n';
                break;
            case TraceOp::Kind::Delete:
                os << indent << "del " << op.ordinal << '\n';
                break;
            case TraceOp::Kind::Union:
                os << indent << "u {\n";
                write_ops(os, op.block, depth + 1);
                os << indent << "}\n";
                break;
        }
    }
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::int64_t parse_int(const std::string& tok, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw TraceParseError("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
    }
    return value;
}

std::uint64_t parse_ordinal(const std::string& tok, std::size_t line_no) {
    std::int64_t v = parse_int(tok, line_no);
    if (v < 0) {
        throw TraceParseError("line " + std::to_string(line_no) + ": negative ordinal");
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace

std::string OpTrace::to_text() const {
    std::ostringstream os;
    write_ops(os, ops, 0);
    return os.str();
}

OpTrace OpTrace::parse(const std::string& text) {
    OpTrace trace;
    std::vector<std::vector<TraceOp>*> frames{&trace.ops};
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        std::vector<TraceOp>& cur = *frames.back();
        const std::string& cmd = toks[0];
        if (cmd == "i" && toks.size() == 2) {
            cur.push_back(TraceOp::insert(parse_int(toks[1], line_no)));
        } else if (cmd == "x" && toks.size() == 1) {
            cur.push_back(TraceOp::extract_min());
        } else if (cmd == "d" && toks.size() == 3) {
            cur.push_back(
                TraceOp::decrease_key(parse_ordinal(toks[1], line_no), parse_int(toks[2], line_no)));
        } else if (cmd == "del" && toks.size() == 2) {
            cur.push_back(TraceOp::delete_node(parse_ordinal(toks[1], line_no)));
        } else if (cmd == "u" && toks.size() == 2 && toks[1] == "{") {
            cur.push_back(TraceOp::union_block({}));
            frames.push_back(&cur.back().block);
        } else if (cmd == "}" && toks.size() == 1) {
            if (frames.size() == 1) {
                throw TraceParseError("line " + std::to_string(line_no) + ": unmatched '}'");
            }
            frames.pop_back();
        } else {
            throw TraceParseError("line " + std::to_string(line_no) + ": unrecognized op '" +
                                  line + "'");
        }
    }
    if (frames.size() != 1) throw TraceParseError("unterminated union block");
    return trace;
}

OpTrace OpTrace::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TraceParseError("cannot open trace file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

namespace {

std::size_t count_ops(const std::vector<TraceOp>& ops) {
    std::size_t total = 0;
    for (const TraceOp& op : ops) {
        ++total;
        if (op.kind == TraceOp::Kind::Union) total += count_ops(op.block);
    }
    return total;
}

void collect_keys(const std::vector<TraceOp>& ops, std::vector<Key>& out) {
    for (const TraceOp& op : ops) {
        if (op.kind == TraceOp::Kind::Insert) out.push_back(op.key);
        if (op.kind == TraceOp::Kind::Union) collect_keys(op.block, out);
    }
}

}  // namespace

std::size_t OpTrace::op_count() const { return count_ops(ops); }

std::size_t OpTrace::insert_count() const { return insert_keys().size(); }

std::vector<Key> OpTrace::insert_keys() const {
    std::vector<Key> keys;
    collect_keys(ops, keys);
    return keys;
}

}  // namespace heaps

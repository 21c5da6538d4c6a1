#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "circlekit/ruler.hpp"

namespace circlekit::ruler {

namespace {

[[noreturn]] void syntax(int line, int col, const std::string& what) {
    fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over one source line; columns are 1-based.
class Cursor {
public:
    Cursor(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size() || text_[pos_] == '#';
    }
    int col() const { return static_cast<int>(pos_) + 1; }
    int line() const { return line_; }

    std::string ident(const char* what) {
        skip_space();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) syntax(line_, col(), std::string("expected ") + what);
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) syntax(line_, col(), std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string quoted() {
        skip_space();
        if (!peek('"')) syntax(line_, col(), "expected a quoted hint");
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
        if (pos_ >= text_.size()) syntax(line_, col(), "unterminated hint");
        std::string out(text_.substr(start, pos_ - start));
        ++pos_;
        return out;
    }
    void finish() {
        if (!at_end()) syntax(line_, col(), "unexpected text");
    }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

enum class Kind { Point, Line, Tag };

const char* kind_word(Kind k) {
    switch (k) {
        case Kind::Point: return "a point";
        case Kind::Line: return "a line";
        case Kind::Tag: return "a tag";
    }
    return "?";
}

// Symbol table aware of when/unless blocks: a name may be defined once under
// a condition and once under its negation, after which it is visible
// unconditionally.
class Symbols {
public:
    void define(const std::string& name, Kind kind, const std::optional<Condition>& cond, int line, int col) {
        auto it = table_.find(name);
        if (it == table_.end()) {
            table_[name] = {kind, cond ? std::set<std::string>{key(*cond)} : std::set<std::string>{}, !cond.has_value()};
            return;
        }
        Entry& e = it->second;
        if (e.unconditional || !cond || e.kind != kind) syntax(line, col, "'" + name + "' is already defined");
        Condition other = *cond;
        other.negated = !other.negated;
        if (!e.conds.count(key(other)) || e.conds.count(key(*cond))) syntax(line, col, "'" + name + "' is already defined");
        e.conds.insert(key(*cond));
        e.unconditional = true;
    }

    void require(const std::string& name, Kind kind, const std::optional<Condition>& cond, int line) const {
        auto it = table_.find(name);
        const bool visible = it != table_.end() && (it->second.unconditional || (cond && it->second.conds.count(key(*cond))));
        if (!visible) fail(ErrorKind::UnknownIdentifier, "line " + std::to_string(line) + ": '" + name + "' is not defined");
        if (it->second.kind != kind)
            fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": '" + name + "' is not " + kind_word(kind));
    }

private:
    struct Entry {
        Kind kind;
        std::set<std::string> conds;
        bool unconditional;
    };
    static std::string key(const Condition& c) { return (c.negated ? "!" : "") + c.tag; }
    std::map<std::string, Entry> table_;
};

std::vector<std::string> split_hint(const std::string& hint) {
    std::vector<std::string> parts;
    std::stringstream ss(hint);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    return parts;
}

// Hint forms: "any"; on lines "beyond:P:Q" and "between:P:Q"; on the circle
// "arc:P:Q" (counterclockwise from P to Q) and "arc:P:Q:R" (avoiding R).
// Returns the point names the hint refers to.
std::vector<std::string> hint_points(Op op, const std::string& hint, int line) {
    const auto parts = split_hint(hint);
    auto bad = [&]() -> std::vector<std::string> {
        fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": bad hint \"" + hint + "\"");
    };
    if (parts.size() == 1 && parts[0] == "any") return {};
    if (op == Op::OnLine && parts.size() == 3 && (parts[0] == "beyond" || parts[0] == "between"))
        return {parts[1], parts[2]};
    if (op == Op::OnCircle && parts[0] == "arc" && (parts.size() == 3 || parts.size() == 4))
        return {parts.begin() + 1, parts.end()};
    return bad();
}

struct CallShape {
    Op op;
    std::vector<Kind> args;  // identifier arguments in order
    bool hint;               // trailing hint argument
};

const std::map<std::string, CallShape>& calls() {
    static const std::map<std::string, CallShape> table = {
        {"join", {Op::Join, {Kind::Point, Kind::Point}, false}},
        {"meet", {Op::Meet, {Kind::Line, Kind::Line}, false}},
        {"on_line", {Op::OnLine, {Kind::Line}, true}},
        {"on_circle", {Op::OnCircle, {}, true}},
        {"second_meet", {Op::SecondMeet, {Kind::Line, Kind::Point}, false}},
    };
    return table;
}

}  // namespace

std::string_view op_name(Op op) {
    switch (op) {
        case Op::Join: return "join";
        case Op::Meet: return "meet";
        case Op::OnLine: return "on_line";
        case Op::OnCircle: return "on_circle";
        case Op::SecondMeet: return "second_meet";
    }
    return "?";
}

std::string Program::target_predicate() const { return outputs.empty() ? std::string() : outputs.back().predicate; }

Program parse(std::string_view text) {
    Program prog;
    Symbols symbols;
    std::optional<Condition> block;
    int block_line = 0;
    bool have_circle = false;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        Cursor cur(text.substr(start, end - start), line_no);
        start = end + 1;
        if (cur.at_end()) {
            if (end == text.size()) break;
            continue;
        }

        const int word_col = (cur.skip_space(), cur.col());
        const std::string word = cur.ident("a statement");

        if (word == "given") {
            GivenDecl g;
            g.line = line_no;
            const int name_col = (cur.skip_space(), cur.col());
            g.name = cur.ident("a name");
            cur.expect(':');
            const int kind_col = (cur.skip_space(), cur.col());
            const std::string kind = cur.ident("a kind");
            cur.finish();
            if (block) syntax(line_no, word_col, "givens cannot be conditional");
            if (kind == "point") {
                g.kind = GivenKind::Point;
                symbols.define(g.name, Kind::Point, std::nullopt, line_no, name_col);
            } else if (kind == "line") {
                g.kind = GivenKind::Line;
                symbols.define(g.name, Kind::Line, std::nullopt, line_no, name_col);
            } else if (kind == "circle_with_center") {
                if (have_circle) syntax(line_no, kind_col, "only one circle may be given");
                have_circle = true;
                g.kind = GivenKind::CircleWithCenter;
                symbols.define(g.name, Kind::Point, std::nullopt, line_no, name_col);
            } else if (kind == "tag") {
                g.kind = GivenKind::Tag;
                symbols.define(g.name, Kind::Tag, std::nullopt, line_no, name_col);
            } else {
                syntax(line_no, kind_col, "unknown kind '" + kind + "'");
            }
            prog.givens.push_back(g);
            if (end == text.size()) break;
            continue;
        }

        if (word == "when" || word == "unless") {
            if (block) syntax(line_no, word_col, "blocks cannot nest");
            const std::string tag = cur.ident("a tag");
            cur.finish();
            symbols.require(tag, Kind::Tag, std::nullopt, line_no);
            block = Condition{tag, word == "unless"};
            block_line = line_no;
            if (end == text.size()) break;
            continue;
        }

        if (word == "end") {
            cur.finish();
            if (!block) syntax(line_no, word_col, "'end' without a block");
            block.reset();
            if (end == text.size()) break;
            continue;
        }

        if (word == "output") {
            OutputDecl o;
            o.line = line_no;
            o.name = cur.ident("a name");
            cur.expect(':');
            o.predicate = cur.ident("a predicate id");
            cur.finish();
            if (block) syntax(line_no, word_col, "outputs cannot be conditional");
            // Outputs may be points or lines.
            try {
                symbols.require(o.name, Kind::Point, std::nullopt, line_no);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::UnknownIdentifier) throw;
                symbols.require(o.name, Kind::Line, std::nullopt, line_no);
            }
            prog.outputs.push_back(o);
            if (end == text.size()) break;
            continue;
        }

        // Assignment.
        Step step;
        step.target = word;
        step.line = line_no;
        step.condition = block;
        cur.expect('=');
        const int call_col = (cur.skip_space(), cur.col());
        const std::string call = cur.ident("a primitive");
        const auto it = calls().find(call);
        if (it == calls().end())
            syntax(line_no, call_col, "unknown primitive '" + call + "'; only join, meet, on_line, on_circle and second_meet are allowed");
        const CallShape& shape = it->second;
        step.op = shape.op;

        // Collect raw arguments, then check the count before the kinds.
        struct Arg {
            std::string text;
            bool quoted;
        };
        std::vector<Arg> raw;
        cur.expect('(');
        if (!cur.peek(')')) {
            for (;;) {
                if (cur.peek('"')) {
                    raw.push_back({cur.quoted(), true});
                } else {
                    raw.push_back({cur.ident("an argument"), false});
                }
                if (cur.peek(',')) {
                    cur.expect(',');
                    continue;
                }
                break;
            }
        }
        cur.expect(')');
        cur.finish();
        const std::size_t want = shape.args.size() + (shape.hint ? 1 : 0);
        if (raw.size() != want)
            fail(ErrorKind::ArityError, "line " + std::to_string(line_no) + ": " + call + " takes " + std::to_string(want) +
                                            " argument(s), got " + std::to_string(raw.size()));
        for (std::size_t i = 0; i < shape.args.size(); ++i) {
            if (raw[i].quoted) syntax(line_no, call_col, call + ": argument " + std::to_string(i + 1) + " must be a name");
            symbols.require(raw[i].text, shape.args[i], block, line_no);
            step.args.push_back(raw[i].text);
        }
        if (shape.hint) {
            if (!raw.back().quoted) syntax(line_no, call_col, call + ": the last argument must be a quoted hint");
            step.hint = raw.back().text;
            for (const auto& name : hint_points(step.op, step.hint, line_no)) symbols.require(name, Kind::Point, block, line_no);
        }
        if ((step.op == Op::OnCircle || step.op == Op::SecondMeet) && !have_circle)
            syntax(line_no, call_col, call + " needs a given circle");
        const Kind made = step.op == Op::Join ? Kind::Line : Kind::Point;
        symbols.define(step.target, made, block, line_no, 1);
        prog.steps.push_back(step);
        if (end == text.size()) break;
    }
    if (block) syntax(block_line, 1, "block is not closed with 'end'");
    return prog;
}

std::string format(const Program& p) {
    std::ostringstream out;
    for (const auto& g : p.givens) {
        const char* kind = g.kind == GivenKind::Point  ? "point"
                           : g.kind == GivenKind::Line ? "line"
                           : g.kind == GivenKind::Tag  ? "tag"
                                                       : "circle_with_center";
        out << "given " << g.name << " : " << kind << "\n";
    }
    std::optional<Condition> open;
    for (const auto& s : p.steps) {
        if (open != s.condition) {
            if (open) out << "end\n";
            if (s.condition) out << (s.condition->negated ? "unless " : "when ") << s.condition->tag << "\n";
            open = s.condition;
        }
        out << (open ? "  " : "") << s.target << " = " << op_name(s.op) << "(";
        for (std::size_t i = 0; i < s.args.size(); ++i) out << (i ? ", " : "") << s.args[i];
        if (s.op == Op::OnLine || s.op == Op::OnCircle) out << (s.args.empty() ? "" : ", ") << '"' << s.hint << '"';
        out << ")\n";
    }
    if (open) out << "end\n";
    for (const auto& o : p.outputs) out << "output " << o.name << " : " << o.predicate << "\n";
    return out.str();
}

AuditReport audit(const Program& p) {
    AuditReport r;
    int circles = 0;
    for (const auto& g : p.givens)
        if (g.kind == GivenKind::CircleWithCenter) ++circles;
    if (circles > 1) r.problems.push_back("more than one given circle");
    for (const auto& s : p.steps) {
        ++r.primitive_counts[std::string(op_name(s.op))];
        const bool uses_circle = s.op == Op::OnCircle || s.op == Op::SecondMeet;
        if (uses_circle && circles == 0)
            r.problems.push_back("line " + std::to_string(s.line) + ": circle access without a given circle");
    }
    // Every Op is a straightedge move or an incidence with the given circle;
    // nothing in the AST can draw a new circle.
    r.straightedge_only = r.problems.empty();
    return r;
}

}  // namespace circlekit::ruler

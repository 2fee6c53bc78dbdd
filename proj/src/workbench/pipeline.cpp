#include "rls/pipeline.hpp"

#include <cctype>
#include <sstream>

#include "rls/convolution.hpp"
#include "rls/errors.hpp"

namespace rls {

namespace {

class PipelineParser {
   public:
    explicit PipelineParser(std::string_view text) : text_(strip_comments(text)) {
        line_starts_.push_back(0);
        for (size_t i = 0; i < text_.size(); ++i) {
            if (text_[i] == '\n') line_starts_.push_back(i + 1);
        }
    }

    Pipeline parse() {
        Pipeline p;
        p.conductor = header();
        conductor_ = p.conductor;
        skip();
        if (pos_ >= text_.size()) fail("expected an expression after the conductor line");
        p.root = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected text after the expression");
        check_labels(p.root);
        return p;
    }

   private:
    static std::string strip_comments(std::string_view text) {
        std::string out(text);
        bool comment = false;
        for (char& c : out) {
            if (c == '\n') {
                comment = false;
            } else if (c == '#') {
                comment = true;
            }
            if (comment) c = ' ';
        }
        return out;
    }

    [[nodiscard]] std::pair<size_t, size_t> position(size_t offset) const {
        size_t line = 0;
        while (line + 1 < line_starts_.size() && line_starts_[line + 1] <= offset) ++line;
        return {line + 1, offset - line_starts_[line] + 1};
    }

    [[noreturn]] void fail_at(size_t offset, const std::string& message) const {
        const auto [line, column] = position(offset);
        throw ParseError(message, line, column);
    }
    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string word() {
        skip();
        const size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-')) {
            ++pos_;
        }
        if (start == pos_) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }

    int header() {
        skip();
        const size_t at = pos_;
        if (word() != "conductor") fail_at(at, "a pipeline document starts with 'conductor N'");
        skip();
        const size_t num = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (num == pos_ || pos_ - num > 6) fail_at(num, "expected a positive conductor");
        const int n = std::stoi(text_.substr(num, pos_ - num));
        if (n < 1) fail_at(num, "expected a positive conductor");
        return n;
    }

    /// A scalar literal running up to the next top-level ',', ';' or ')'.
    Cyclotomic scalar() {
        skip();
        const size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (depth == 0 && (c == ',' || c == ';' || c == ')')) break;
            if (c == '(') ++depth;
            if (c == ')') --depth;
            ++pos_;
        }
        if (start == pos_) fail("expected a scalar");
        try {
            return parse_scalar(std::string_view(text_).substr(start, pos_ - start), conductor_);
        } catch (const ParseError& e) {
            fail_at(start + e.column() - 1, "bad scalar: " + std::string(e.what()));
        }
    }

    PipelineNode expression() {
        skip();
        PipelineNode node;
        const size_t at = pos_;
        std::tie(node.line, node.column) = position(at);
        const std::string op = word();
        expect('(');
        if (op == "atom") {
            node.kind = PipelineNode::Kind::Atom;
            do {
                node.labels.push_back(word());
            } while (accept(','));
            expect(';');
            do {
                node.values.push_back(scalar());
            } while (accept(','));
            if (node.values.size() != node.labels.size()) {
                fail_at(at, "atom has " + std::to_string(node.labels.size()) + " labels but " +
                                std::to_string(node.values.size()) + " values");
            }
        } else if (op == "mc") {
            node.kind = PipelineNode::Kind::MC;
            node.lambda = scalar();
            expect(',');
            node.children.push_back(expression());
        } else if (op == "tensor") {
            node.kind = PipelineNode::Kind::Tensor;
            node.children.push_back(expression());
            expect(',');
            node.children.push_back(expression());
        } else if (op == "dual") {
            node.kind = PipelineNode::Kind::Dual;
            node.children.push_back(expression());
        } else if (op == "twist") {
            node.kind = PipelineNode::Kind::Twist;
            node.children.push_back(expression());
            expect(',');
            skip();
            const size_t atom_at = pos_;
            node.children.push_back(expression());
            if (node.children.back().kind != PipelineNode::Kind::Atom) {
                fail_at(atom_at, "the second argument of twist must be an atom");
            }
        } else {
            fail_at(at, "unknown operation '" + op + "'");
        }
        expect(')');
        return node;
    }

    void check_labels(const PipelineNode& node) {
        if (node.kind == PipelineNode::Kind::Atom) {
            if (labels_.empty()) {
                labels_ = node.labels;
            } else if (node.labels != labels_) {
                throw ParseError("atom labels differ from the first atom's labels", node.line, node.column);
            }
        }
        for (const auto& c : node.children) check_labels(c);
    }

    std::string text_;
    std::vector<size_t> line_starts_;
    size_t pos_ = 0;
    int conductor_ = 1;
    std::vector<std::string> labels_;
};

std::string join_scalars(const std::vector<Cyclotomic>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + to_string(values[i]);
    return out;
}

std::string operation_name(const PipelineNode& node) {
    switch (node.kind) {
        case PipelineNode::Kind::Atom: return "atom(" + join_scalars(node.values) + ")";
        case PipelineNode::Kind::MC: return "mc(" + to_string(node.lambda) + ")";
        case PipelineNode::Kind::Tensor: return "tensor";
        case PipelineNode::Kind::Dual: return "dual";
        case PipelineNode::Kind::Twist: return "twist(" + join_scalars(node.children[1].values) + ")";
    }
    return "";
}

std::string form_class(const MonodromyTuple& t) {
    const auto forms = invariant_bilinear_forms(t);
    if (forms.empty()) return "none";
    if (forms.size() > 1) return std::to_string(forms.size()) + "-dimensional";
    std::string out(symmetry_name(forms.front().symmetry));
    if (!forms.front().nondegenerate) out += " degenerate";
    return out;
}

MonodromyTuple atom_tuple(const PipelineNode& node) { return rank1_from_ramification(node.labels, node.values); }

MonodromyTuple eval_node(const PipelineNode& node, size_t depth, std::vector<TraceEntry>& trace) {
    auto child = [&](size_t i) { return eval_node(node.children[i], depth + 1, trace); };
    MonodromyTuple t = [&] {
        switch (node.kind) {
            case PipelineNode::Kind::Atom: return atom_tuple(node);
            case PipelineNode::Kind::MC: return middle_convolution(child(0), node.lambda);
            case PipelineNode::Kind::Tensor: {
                MonodromyTuple a = child(0);
                return tensor(a, child(1));
            }
            case PipelineNode::Kind::Dual: return dual(child(0));
            case PipelineNode::Kind::Twist: return scale_twist(child(0), atom_tuple(node.children[1]));
        }
        throw Error(ErrorCode::InvariantViolation, "unknown pipeline node");
    }();

    TraceEntry entry;
    entry.depth = depth;
    entry.operation = operation_name(node);
    entry.rank = t.rank();
    try {
        for (const auto& g : t.matrices()) entry.jordan.push_back(jordan_data(g));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotQuasiUnipotent) throw;
        entry.jordan.clear();
    }
    entry.form_class = form_class(t);
    trace.push_back(std::move(entry));
    return t;
}

}  // namespace

Pipeline parse_pipeline(std::string_view text) { return PipelineParser(text).parse(); }

std::string format_expression(const PipelineNode& node) {
    switch (node.kind) {
        case PipelineNode::Kind::Atom: {
            std::string labels;
            for (size_t i = 0; i < node.labels.size(); ++i) labels += (i ? ", " : "") + node.labels[i];
            return "atom(" + labels + "; " + join_scalars(node.values) + ")";
        }
        case PipelineNode::Kind::MC:
            return "mc(" + to_string(node.lambda) + ", " + format_expression(node.children[0]) + ")";
        case PipelineNode::Kind::Tensor:
            return "tensor(" + format_expression(node.children[0]) + ", " + format_expression(node.children[1]) + ")";
        case PipelineNode::Kind::Dual: return "dual(" + format_expression(node.children[0]) + ")";
        case PipelineNode::Kind::Twist:
            return "twist(" + format_expression(node.children[0]) + ", " + format_expression(node.children[1]) + ")";
    }
    return "";
}

std::string format_pipeline(const Pipeline& p) {
    return "conductor " + std::to_string(p.conductor) + "\n" + format_expression(p.root) + "\n";
}

Evaluation evaluate(const Pipeline& p) {
    std::vector<TraceEntry> trace;
    MonodromyTuple result = eval_node(p.root, 0, trace);
    return {std::move(result), std::move(trace)};
}

std::string format_trace(const std::vector<TraceEntry>& trace, int conductor) {
    std::ostringstream os;
    for (const auto& e : trace) {
        os << std::string(2 * e.depth, ' ') << e.operation << " -> rank " << e.rank << ", form " << e.form_class
           << ", jordan ";
        if (e.jordan.empty()) {
            os << "not quasi-unipotent";
        } else {
            for (size_t k = 0; k < e.jordan.size(); ++k) os << (k ? " | " : "") << jordan_notation(e.jordan[k], conductor);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace rls

#include "quiddity/tree_io.hpp"

#include <map>

#include <json.hpp>

#include "quiddity/sum.hpp"

namespace quiddity {

namespace {

using nlohmann::json;

DecompositionTreePtr checked_leaf(Cycle cycle, Lambda lambda) {
    if (classify(cycle) != std::optional<Lambda>(lambda))
        throw std::invalid_argument("tree parse: recorded lambda disagrees with classification of " +
                                    cycle.str());
    return std::make_shared<const DecompositionTree>(
        DecompositionTree{std::move(cycle), lambda, std::nullopt, nullptr, nullptr});
}

DecompositionTreePtr checked_node(Cycle cycle, Lambda lambda, DihedralElem sigma,
                                  DecompositionTreePtr left, DecompositionTreePtr right) {
    if (classify(cycle) != std::optional<Lambda>(lambda))
        throw std::invalid_argument("tree parse: recorded lambda disagrees with classification of " +
                                    cycle.str());
    if (sigma.n() != cycle.length())
        throw std::invalid_argument("tree parse: witness group size " + std::to_string(sigma.n()) +
                                    " does not match cycle length of " + cycle.str());
    if (cycle != apply(sigma, cycle_sum(left->cycle, right->cycle)))
        throw std::invalid_argument("tree parse: node equation fails for " + cycle.str());
    return std::make_shared<const DecompositionTree>(
        DecompositionTree{std::move(cycle), lambda, sigma, std::move(left), std::move(right)});
}

void write_text(const DecompositionTree& t, int depth, std::string& out) {
    out.append(static_cast<size_t>(2 * depth), ' ');
    if (t.is_leaf()) {
        out += "leaf cycle=" + t.cycle.str() + " lambda=" + lambda_str(t.lambda) +
               " irreducible=true\n";
        return;
    }
    out += "node cycle=" + t.cycle.str() + " lambda=" + lambda_str(t.lambda) +
           " sigma=" + t.sigma->str() + "\n";
    write_text(*t.left, depth + 1, out);
    write_text(*t.right, depth + 1, out);
}

struct Line {
    std::string head;                          // "leaf" or "node"
    std::map<std::string, std::string> kv;  // key -> value, split at first '='
    int depth;
};

Line split_line(std::string_view raw) {
    size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    if (indent % 2 != 0)
        throw std::invalid_argument("tree parse: odd indent in line '" + std::string(raw) + "'");
    std::string_view rest = raw.substr(indent);
    Line line;
    line.depth = static_cast<int>(indent / 2);
    bool first = true;
    while (!rest.empty()) {
        size_t space = rest.find(' ');
        std::string_view tok = space == std::string_view::npos ? rest : rest.substr(0, space);
        rest = space == std::string_view::npos ? std::string_view() : rest.substr(space + 1);
        if (tok.empty())
            throw std::invalid_argument("tree parse: stray whitespace in line '" +
                                        std::string(raw) + "'");
        if (first) {
            line.head = std::string(tok);
            first = false;
            continue;
        }
        size_t eq = tok.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("tree parse: expected key=value, got '" +
                                        std::string(tok) + "'");
        line.kv.emplace(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
    }
    if (first) throw std::invalid_argument("tree parse: empty line");
    return line;
}

const std::string& field(const Line& line, const char* key) {
    auto it = line.kv.find(key);
    if (it == line.kv.end())
        throw std::invalid_argument(std::string("tree parse: missing field '") + key + "'");
    return it->second;
}

Lambda parse_lambda_field(const std::string& text) {
    auto lam = lambda_parse(text);
    if (!lam) throw std::invalid_argument("tree parse: bad lambda '" + text + "'");
    return *lam;
}

DecompositionTreePtr parse_rec(const std::vector<std::string>& lines, size_t& idx, int depth) {
    if (idx >= lines.size())
        throw std::invalid_argument("tree parse: unexpected end of input at depth " +
                                    std::to_string(depth));
    Line line = split_line(lines[idx]);
    if (line.depth != depth)
        throw std::invalid_argument("tree parse: expected depth " + std::to_string(depth) +
                                    ", got " + std::to_string(line.depth));
    ++idx;
    Cycle cycle = Cycle::parse(field(line, "cycle"));
    Lambda lambda = parse_lambda_field(field(line, "lambda"));
    if (line.head == "leaf") {
        if (field(line, "irreducible") != "true")
            throw std::invalid_argument("tree parse: leaf must carry irreducible=true");
        return checked_leaf(std::move(cycle), lambda);
    }
    if (line.head != "node")
        throw std::invalid_argument("tree parse: unknown line head '" + line.head + "'");
    DihedralElem sigma = DihedralElem::parse(field(line, "sigma"));
    DecompositionTreePtr left = parse_rec(lines, idx, depth + 1);
    DecompositionTreePtr right = parse_rec(lines, idx, depth + 1);
    return checked_node(std::move(cycle), lambda, sigma, std::move(left), std::move(right));
}

json to_json_rec(const DecompositionTree& t) {
    json j;
    j["kind"] = t.is_leaf() ? "leaf" : "node";
    json cyc = json::array();
    for (const Scalar& s : t.cycle.entries()) cyc.push_back(s.str());
    j["cycle"] = std::move(cyc);
    j["lambda"] = lambda_value(t.lambda);
    if (t.is_leaf()) {
        j["irreducible"] = true;
    } else {
        j["sigma"] = {{"rot", t.sigma->rot()}, {"reflect", t.sigma->reflect()},
                      {"n", t.sigma->n()}};
        j["left"] = to_json_rec(*t.left);
        j["right"] = to_json_rec(*t.right);
    }
    return j;
}

DecompositionTreePtr from_json_rec(const json& j) {
    std::vector<Scalar> entries;
    for (const auto& e : j.at("cycle")) entries.push_back(Scalar::parse(e.get<std::string>()));
    Cycle cycle(std::move(entries));
    int lam = j.at("lambda").get<int>();
    if (lam != 1 && lam != -1)
        throw std::invalid_argument("tree parse: lambda must be +1 or -1");
    Lambda lambda = lam == 1 ? Lambda::Plus : Lambda::Minus;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
        if (j.at("irreducible").get<bool>() != true)
            throw std::invalid_argument("tree parse: leaf must carry irreducible=true");
        return checked_leaf(std::move(cycle), lambda);
    }
    if (kind != "node") throw std::invalid_argument("tree parse: unknown kind '" + kind + "'");
    const json& s = j.at("sigma");
    DihedralElem sigma(s.at("n").get<int>(), s.at("rot").get<int>(), s.at("reflect").get<bool>());
    return checked_node(std::move(cycle), lambda, sigma, from_json_rec(j.at("left")),
                        from_json_rec(j.at("right")));
}

}  // namespace

std::string tree_to_text(const DecompositionTree& tree) {
    std::string out;
    write_text(tree, 0, out);
    return out;
}

DecompositionTreePtr tree_from_text(std::string_view text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) throw std::invalid_argument("tree parse: empty input");
    size_t idx = 0;
    DecompositionTreePtr tree = parse_rec(lines, idx, 0);
    if (idx != lines.size())
        throw std::invalid_argument("tree parse: trailing content after the root subtree");
    return tree;
}

std::string tree_to_json(const DecompositionTree& tree) { return to_json_rec(tree).dump(); }

DecompositionTreePtr tree_from_json(std::string_view text) {
    try {
        return from_json_rec(json::parse(text));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("tree parse: ") + e.what());
    }
}

}  // namespace quiddity

// Command-line front end for the quiddity-cycle algebra.
//
// Exit codes: 0 success, 1 negative verdict (not a quiddity cycle, not
// equivalent, irreducible when a reduction was requested, failed check),
// 2 usage error, 3 domain violation, 4 internal invariant failure.

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quiddity/enumerate.hpp"
#include "quiddity/frieze.hpp"
#include "quiddity/tree_io.hpp"

using nlohmann::json;
using namespace quiddity;

namespace {

json cycle_json(const Cycle& c) {
    json arr = json::array();
    for (const Scalar& s : c.entries()) arr.push_back(s.str());
    return arr;
}

json witness_json(const DihedralElem& w) {
    return {{"rot", w.rot()}, {"reflect", w.reflect()}, {"n", w.n()}};
}

json reduction_json(const Reduction& r) {
    return {{"sigma", witness_json(r.sigma)},
            {"a", cycle_json(r.split.a)},
            {"lambda_a", lambda_value(r.split.lambda_a)},
            {"b", cycle_json(r.split.b)},
            {"lambda_b", lambda_value(r.split.lambda_b)}};
}

std::string reduction_line(const Reduction& r) {
    return "sigma=" + r.sigma.str() + " a=" + r.split.a.str() +
           " lambda_a=" + lambda_str(r.split.lambda_a) + " b=" + r.split.b.str() +
           " lambda_b=" + lambda_str(r.split.lambda_b);
}

void require_in_domain(const Cycle& c, const DomainSpec& d) {
    if (!c.in_domain(d))
        throw DomainViolation(c.str() + " has entries outside " + d.str());
}

Integer parse_integer(const std::string& text, const char* what) {
    try {
        return Integer(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(what) + ": not an integer: '" + text + "'");
    }
}

int run_verify(const std::string& cycle_text, const std::string& domain_text, bool as_json) {
    Cycle c = Cycle::parse(cycle_text);
    DomainSpec d = DomainSpec::parse(domain_text);
    require_in_domain(c, d);
    auto lam = classify(c);
    if (as_json) {
        json out{{"cycle", cycle_json(c)}, {"lambda", nullptr}};
        if (lam) out["lambda"] = lambda_value(*lam);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "lambda=" << (lam ? lambda_str(*lam) : "none") << "\n";
    }
    return lam ? 0 : 1;
}

int run_sum(const std::string& a_text, const std::string& b_text, bool as_json) {
    Cycle a = Cycle::parse(a_text), b = Cycle::parse(b_text);
    Cycle s = cycle_sum(a, b);
    if (as_json)
        std::cout << json{{"a", cycle_json(a)}, {"b", cycle_json(b)}, {"sum", cycle_json(s)}}.dump()
                  << "\n";
    else
        std::cout << s.str() << "\n";
    return 0;
}

int run_equiv(const std::string& a_text, const std::string& b_text, bool as_json) {
    Cycle a = Cycle::parse(a_text), b = Cycle::parse(b_text);
    auto w = equivalence_witness(a, b);
    if (as_json) {
        json out{{"equivalent", w.has_value()}, {"witness", nullptr}};
        if (w) out["witness"] = witness_json(*w);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (w ? w->str() : "not equivalent") << "\n";
    }
    return w ? 0 : 1;
}

int run_canon(const std::string& cycle_text, bool as_json) {
    Cycle c = Cycle::parse(cycle_text);
    CanonicalForm form = canonical_form(c);
    if (as_json) {
        std::cout << json{{"canonical", cycle_json(form.cycle)},
                          {"witness", witness_json(form.witness)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << form.cycle.str() << "\n";
        std::cout << "witness=" << form.witness.str() << "\n";
    }
    return 0;
}

int run_reduce(const std::string& cycle_text, const std::string& domain_text, bool as_json) {
    Cycle c = Cycle::parse(cycle_text);
    DomainSpec d = DomainSpec::parse(domain_text);
    auto reductions = reduce_once(c, d);
    if (as_json) {
        json list = json::array();
        for (const Reduction& r : reductions) list.push_back(reduction_json(r));
        std::cout << json{{"cycle", cycle_json(c)},
                          {"domain", d.str()},
                          {"reductions", std::move(list)}}
                         .dump()
                  << "\n";
    } else if (reductions.empty()) {
        std::cout << "irreducible\n";
    } else {
        for (const Reduction& r : reductions) std::cout << reduction_line(r) << "\n";
    }
    return reductions.empty() ? 1 : 0;
}

int run_decompose(const std::string& cycle_text, const std::string& domain_text, int max_results,
                  bool as_json) {
    Cycle c = Cycle::parse(cycle_text);
    DomainSpec d = DomainSpec::parse(domain_text);
    DecompositionSet set = decompose_all(c, d, max_results);
    if (as_json) {
        json trees = json::array();
        for (const auto& t : set.trees) trees.push_back(json::parse(tree_to_json(*t)));
        std::cout << json{{"trees", std::move(trees)}, {"truncated", set.truncated}}.dump()
                  << "\n";
    } else {
        for (size_t i = 0; i < set.trees.size(); ++i) {
            std::cout << "tree " << (i + 1) << " of " << set.trees.size()
                      << ": leaves=" << set.trees[i]->leaf_count() << "\n"
                      << tree_to_text(*set.trees[i]);
        }
        if (set.truncated) std::cout << "truncated: result cap reached\n";
    }
    return 0;
}

int run_right_factor(const std::string& cycle_text, const std::string& domain_text,
                     bool require_irreducible, bool allow_sigma, bool as_json) {
    Cycle c = Cycle::parse(cycle_text);
    DomainSpec d = DomainSpec::parse(domain_text);
    auto hit = right_factor_search(c, d, require_irreducible, allow_sigma);
    if (as_json) {
        json out{{"found", hit.has_value()}};
        if (hit) out["reduction"] = reduction_json(*hit);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (hit ? reduction_line(*hit) : "none") << "\n";
    }
    return hit ? 0 : 1;
}

const char* nest_status_str(NestedFactorization::Status s) {
    switch (s) {
        case NestedFactorization::Status::Complete:
            return "complete";
        case NestedFactorization::Status::BudgetExhausted:
            return "budget-exhausted";
        case NestedFactorization::Status::NoFactorization:
            return "no-factorization";
    }
    return "?";
}

int run_nest(const std::string& cycle_text, const std::string& domain_text, long long budget,
             bool as_json) {
    Cycle c = Cycle::parse(cycle_text);
    DomainSpec d = DomainSpec::parse(domain_text);
    NestedFactorization f = left_nested_factorization(c, d, budget);
    const bool complete = f.status == NestedFactorization::Status::Complete;
    if (as_json) {
        json factors = json::array(), twists = json::array();
        for (const Cycle& a : f.factors) factors.push_back(cycle_json(a));
        for (const DihedralElem& t : f.twists) twists.push_back(witness_json(t));
        json out{{"status", nest_status_str(f.status)}, {"factors", std::move(factors)},
                 {"twists", std::move(twists)},        {"residue", nullptr},
                 {"budget_used", f.budget_used},       {"detail", f.detail}};
        if (f.residue) out["residue"] = cycle_json(*f.residue);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "status=" << nest_status_str(f.status) << "\n";
        if (f.residue) std::cout << "residue=" << f.residue->str() << "\n";
        // Evaluation order: start at a1 (or the residue), then alternately
        // sum the next factor and twist.
        const size_t start = f.residue ? 0 : 1;
        if (!f.residue && !f.factors.empty()) std::cout << "a1=" << f.factors[0].str() << "\n";
        for (size_t j = start; j < f.factors.size(); ++j) {
            std::cout << "sigma" << (j - start + 1) << "=" << f.twists[j - start].str() << "\n";
            std::cout << "a" << (j + 1) << "=" << f.factors[j].str() << "\n";
        }
        if (!f.detail.empty()) std::cout << "detail=" << f.detail << "\n";
    }
    return complete ? 0 : 1;
}

int run_enumerate(int length, const std::string& domain_text, const std::string& bound_text,
                  const std::string& lambda_text, bool as_json) {
    DomainSpec d = DomainSpec::parse(domain_text);
    std::optional<Integer> bound;
    if (!bound_text.empty()) bound = parse_integer(bound_text, "enumerate");
    std::optional<Lambda> filter;
    if (!lambda_text.empty()) {
        filter = lambda_parse(lambda_text);
        if (!filter)
            throw std::invalid_argument("enumerate: lambda must be +1 or -1, got '" + lambda_text +
                                        "'");
    }
    std::vector<Cycle> hits = enumerate_cycles(length, d, filter, bound);
    if (as_json) {
        json list = json::array();
        for (const Cycle& c : hits)
            list.push_back({{"cycle", cycle_json(c)}, {"lambda", lambda_value(*classify(c))}});
        std::cout << json{{"cycles", std::move(list)}}.dump() << "\n";
    } else {
        for (const Cycle& c : hits)
            std::cout << c.str() << " # lambda=" << lambda_str(*classify(c)) << "\n";
    }
    return 0;
}

int run_frieze(const std::string& cycle_text, int periods, const std::string& format_text,
               bool validate, bool as_json) {
    Cycle c = Cycle::parse(cycle_text);
    if (classify(c) != std::optional<Lambda>(Lambda::Minus)) {
        std::cerr << c.str() << " is not a (-1)-quiddity cycle; no frieze pattern\n";
        return 1;
    }
    FriezeFormat format;
    if (format_text == "ascii")
        format = FriezeFormat::Ascii;
    else if (format_text == "csv")
        format = FriezeFormat::Csv;
    else
        throw std::invalid_argument("frieze: format must be ascii or csv, got '" + format_text +
                                    "'");
    FriezePattern p = build_frieze(c, periods);
    if (as_json) {
        json rows = json::array();
        for (int r = 0; r <= p.n(); ++r) {
            json row = json::array();
            for (int i = 0; i < p.columns(); ++i) row.push_back(p.at(r, i).str());
            rows.push_back(std::move(row));
        }
        json out{{"quiddity", cycle_json(c)},
                 {"periods", p.periods()},
                 {"width", p.width()},
                 {"rows", std::move(rows)}};
        if (validate) {
            FriezeReport rep = validate_frieze(p);
            json violations = json::array();
            for (const FriezeViolation& v : rep.violations)
                violations.push_back({{"kind", v.kind},
                                      {"row", v.row},
                                      {"col", v.col},
                                      {"detail", v.detail}});
            out["report"] = {{"ok", rep.ok()}, {"violations", std::move(violations)}};
            std::cout << out.dump() << "\n";
            return rep.ok() ? 0 : 1;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << render(p, format);
    if (validate) {
        FriezeReport rep = validate_frieze(p);
        std::cerr << rep.str() << "\n";
        return rep.ok() ? 0 : 1;
    }
    return 0;
}

int run_catalog(const std::string& domain_text, int max_length, const std::string& bound_text,
                bool as_json) {
    DomainSpec d = DomainSpec::parse(domain_text);
    Integer bound = parse_integer(bound_text, "catalog");
    IrreducibleCatalog cat = irreducible_catalog(d, max_length, bound);
    if (as_json) {
        auto cycles_json = [](const std::vector<Cycle>& v) {
            json arr = json::array();
            for (const Cycle& c : v) arr.push_back(cycle_json(c));
            return arr;
        };
        json out{{"domain", cat.domain.str()},
                 {"max_length", cat.max_length},
                 {"bound", cat.bound.get_str()},
                 {"computed", cycles_json(cat.computed)},
                 {"reference", cycles_json(cat.reference)},
                 {"only_computed", cycles_json(cat.only_computed)},
                 {"only_reference", cycles_json(cat.only_reference)},
                 {"probe", nullptr},
                 {"notes", cat.notes}};
        if (cat.probe)
            out["probe"] = {{"cycle", cycle_json(cat.probe->cycle)},
                            {"computed_irreducible", cat.probe->computed_irreducible},
                            {"reference_irreducible", cat.probe->reference_irreducible},
                            {"discrepancy", cat.probe->discrepancy}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    auto print_list = [](const char* name, const std::vector<Cycle>& v) {
        std::cout << name << " (" << v.size() << "):\n";
        for (const Cycle& c : v) std::cout << "  " << c.str() << "\n";
    };
    print_list("computed", cat.computed);
    print_list("reference", cat.reference);
    print_list("only-computed", cat.only_computed);
    print_list("only-reference", cat.only_reference);
    if (cat.probe)
        std::cout << "probe cycle=" << cat.probe->cycle.str() << " computed="
                  << (cat.probe->computed_irreducible ? "irreducible" : "reducible")
                  << " reference="
                  << (cat.probe->reference_irreducible ? "irreducible" : "reducible")
                  << " discrepancy=" << (cat.probe->discrepancy ? "true" : "false") << "\n";
    std::cout << "notes: " << cat.notes << "\n";
    return 0;
}

struct SuiteResult {
    std::string name;
    bool ok = true;
    long checks = 0;
    std::string detail;
};

std::vector<SuiteResult> run_suites(long samples, unsigned long long seed, int pool_max_length,
                                    long pool_bound) {
    std::mt19937_64 rng(seed);
    const std::vector<Cycle> pool = quiddity_pool(3, pool_max_length, Integer(pool_bound));
    if (pool.empty()) throw std::invalid_argument("check: empty sample pool");
    auto pick = [&](const std::vector<Cycle>& v) -> const Cycle& {
        return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
    };
    auto random_sigma = [&](int n) {
        auto elems = dihedral_elements(n);
        return elems[std::uniform_int_distribution<size_t>(0, elems.size() - 1)(rng)];
    };
    auto random_sequence = [&]() {
        std::uniform_int_distribution<int> len(2, pool_max_length);
        std::uniform_int_distribution<long> entry(-pool_bound, pool_bound);
        std::vector<Scalar> v;
        int n = len(rng);
        for (int i = 0; i < n; ++i) v.emplace_back(entry(rng));
        return Cycle(std::move(v));
    };

    std::vector<SuiteResult> results;
    auto suite = [&](const char* name, auto&& body) {
        SuiteResult r;
        r.name = name;
        try {
            body(r);
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    };

    suite("commutativity", [&](SuiteResult& r) {
        for (const Cycle& a : pool)
            for (const Cycle& b : pool) {
                Cycle lhs = cycle_sum(a, b);
                DihedralElem w = commutativity_witness(a, b);
                if (lhs != apply(w, cycle_sum(b, a)))
                    throw std::runtime_error("witness failed for " + a.str() + " / " + b.str());
                ++r.checks;
            }
    });

    suite("associativity", [&](SuiteResult& r) {
        for (long i = 0; i < samples; ++i) {
            associativity_witness(pick(pool), pick(pool), pick(pool));
            ++r.checks;
        }
    });

    suite("dichotomy", [&](SuiteResult& r) {
        for (long i = 0; i < samples; ++i) {
            const Cycle &a = pick(pool), &b = pick(pool), &c = pick(pool);
            dichotomy_witness(a, b, c, random_sigma(b.length() + c.length() - 2));
            ++r.checks;
        }
    });

    suite("cancellation", [&](SuiteResult& r) {
        for (const Cycle& a : pool)
            for (const Cycle& b : pool) {
                if (a.length() != b.length() || classify(a) != classify(b)) continue;
                ++r.checks;
                if (cycle_sum(a, b) == cycle_sum(b, a) && a != b)
                    throw std::runtime_error("cancellation counterexample: " + a.str() + " / " +
                                             b.str());
            }
    });

    suite("lambda-composition", [&](SuiteResult& r) {
        std::bernoulli_distribution from_pool(0.5);
        for (long i = 0; i < samples; ++i) {
            const Cycle& a = pick(pool);
            Cycle b = from_pool(rng) ? pick(pool) : random_sequence();
            if (!lambda_composition_check(a, b))
                throw std::runtime_error("composition check failed for " + a.str() + " / " +
                                         b.str());
            ++r.checks;
        }
    });

    suite("reversal", [&](SuiteResult& r) {
        for (long i = 0; i < samples; ++i) {
            const Cycle &a = pick(pool), &b = pick(pool);
            if (!equivalence_witness(cycle_sum(a, b), cycle_sum(reversed(a), reversed(b))))
                throw std::runtime_error("reversal inequivalent for " + a.str() + " / " + b.str());
            ++r.checks;
        }
    });

    suite("orbit-classification", [&](SuiteResult& r) {
        for (long i = 0; i < samples; ++i) {
            const Cycle& c = pick(pool);
            if (classify(apply(random_sigma(c.length()), c)) != classify(c))
                throw std::runtime_error("classification not orbit-invariant for " + c.str());
            ++r.checks;
        }
    });

    suite("split-recombination", [&](SuiteResult& r) {
        DomainSpec z = DomainSpec::integers();
        for (long i = 0; i < samples; ++i) {
            const Cycle& c = pick(pool);
            for (const Reduction& red : reduce_once(c, z)) {
                if (apply(red.sigma, cycle_sum(red.split.a, red.split.b)) != c)
                    throw std::runtime_error("reduction does not recombine for " + c.str());
                ++r.checks;
            }
        }
    });

    suite("frieze-validate", [&](SuiteResult& r) {
        std::vector<Cycle> minus;
        for (const Cycle& c : pool)
            if (classify(c) == std::optional<Lambda>(Lambda::Minus)) minus.push_back(c);
        long n = std::min<long>(samples, 50);
        for (long i = 0; i < n && !minus.empty(); ++i) {
            const Cycle& c = pick(minus);
            FriezeReport rep = validate_frieze(build_frieze(c, 2));
            if (!rep.ok()) throw std::runtime_error("invalid frieze from " + c.str());
            ++r.checks;
        }
    });

    suite("tree-roundtrip", [&](SuiteResult& r) {
        DomainSpec z = DomainSpec::integers();
        long n = std::min<long>(samples, 25);
        for (long i = 0; i < n; ++i) {
            const Cycle& c = pick(pool);
            for (const auto& t : decompose_all(c, z, 16).trees) {
                std::string text = tree_to_text(*t);
                if (tree_to_text(*tree_from_text(text)) != text)
                    throw std::runtime_error("text round trip changed a tree of " + c.str());
                std::string j = tree_to_json(*t);
                if (tree_to_json(*tree_from_json(j)) != j)
                    throw std::runtime_error("json round trip changed a tree of " + c.str());
                ++r.checks;
            }
        }
    });

    return results;
}

int run_check(long samples, unsigned long long seed, int pool_max_length, long pool_bound,
              bool as_json) {
    auto results = run_suites(samples, seed, pool_max_length, pool_bound);
    bool all_ok = true;
    if (as_json) {
        json list = json::array();
        for (const SuiteResult& r : results) {
            list.push_back({{"name", r.name}, {"ok", r.ok}, {"checks", r.checks},
                            {"detail", r.detail}});
            all_ok = all_ok && r.ok;
        }
        std::cout << json{{"seed", seed}, {"samples", samples}, {"suites", std::move(list)}}.dump()
                  << "\n";
    } else {
        for (const SuiteResult& r : results) {
            if (r.ok)
                std::cout << "ok " << r.name << " (" << r.checks << " checks)\n";
            else
                std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
            all_ok = all_ok && r.ok;
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra of lambda-quiddity cycles and the frieze patterns they induce"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit structured JSON instead of plain text");

    std::string cycle_text, other_text, domain_text = "z";
    std::string bound_text, lambda_text, format_text = "ascii";
    int length = 0, periods = 2, max_results = 64, max_length = 4;
    long long budget = 200000;
    bool require_irreducible = false, allow_sigma = false, validate = false;
    long samples = 200;
    unsigned long long seed = 7;
    int pool_max_length = 5;
    long pool_bound = 2;

    int rc = 0;

    auto* verify = app.add_subcommand("verify", "Classify a cycle: lambda is -1, +1 or none");
    verify->add_option("cycle", cycle_text, "Comma-separated entries")->required();
    verify->add_option("--domain", domain_text, "Ring subset: z, q, nat0, nat1, zb:<B>");
    verify->callback([&] { rc = run_verify(cycle_text, domain_text, as_json); });

    auto* sum = app.add_subcommand("sum", "Glue two cycles");
    sum->add_option("a", cycle_text, "Left operand")->required();
    sum->add_option("b", other_text, "Right operand")->required();
    sum->callback([&] { rc = run_sum(cycle_text, other_text, as_json); });

    auto* equiv = app.add_subcommand("equiv", "Dihedral equivalence witness");
    equiv->add_option("a", cycle_text, "First cycle")->required();
    equiv->add_option("b", other_text, "Second cycle")->required();
    equiv->callback([&] { rc = run_equiv(cycle_text, other_text, as_json); });

    auto* canon = app.add_subcommand("canon", "Canonical orbit representative");
    canon->add_option("cycle", cycle_text, "Comma-separated entries")->required();
    canon->callback([&] { rc = run_canon(cycle_text, as_json); });

    auto* reduce = app.add_subcommand("reduce", "All single-step reductions over a domain");
    reduce->add_option("cycle", cycle_text, "Comma-separated entries")->required();
    reduce->add_option("--domain", domain_text, "Ring subset: z, q, nat0, nat1, zb:<B>");
    reduce->callback([&] { rc = run_reduce(cycle_text, domain_text, as_json); });

    auto* decompose = app.add_subcommand("decompose", "All decompositions into irreducible leaves");
    decompose->add_option("cycle", cycle_text, "Comma-separated entries")->required();
    decompose->add_option("--domain", domain_text, "Ring subset: z, q, nat0, nat1, zb:<B>");
    decompose->add_option("--max-results", max_results, "Result cap (sets the truncated flag)");
    decompose->callback([&] { rc = run_decompose(cycle_text, domain_text, max_results, as_json); });

    auto* right = app.add_subcommand("right-factor", "First factorization with a constrained right factor");
    right->add_option("cycle", cycle_text, "Comma-separated entries")->required();
    right->add_option("--domain", domain_text, "Ring subset: z, q, nat0, nat1, zb:<B>");
    right->add_flag("--require-irreducible", require_irreducible,
                    "Only accept an irreducible right factor");
    right->add_flag("--allow-sigma", allow_sigma, "Search all dihedral images, not just exact splits");
    right->callback([&] {
        rc = run_right_factor(cycle_text, domain_text, require_irreducible, allow_sigma, as_json);
    });

    auto* nest = app.add_subcommand("nest", "Left-nested factorization into irreducible factors");
    nest->add_option("cycle", cycle_text, "Comma-separated entries")->required();
    nest->add_option("--domain", domain_text, "Ring subset: z, q, nat0, nat1, zb:<B>");
    nest->add_option("--budget", budget, "Split-attempt budget (<=0 for unlimited)");
    nest->callback([&] { rc = run_nest(cycle_text, domain_text, budget, as_json); });

    auto* enumerate = app.add_subcommand("enumerate", "All quiddity cycles of one length over a finite box");
    enumerate->add_option("--length", length, "Cycle length")->required();
    enumerate->add_option("--domain", domain_text, "Ring subset: z, q, nat0, nat1, zb:<B>");
    enumerate->add_option("--bound", bound_text, "Entry bound for infinite domains");
    enumerate->add_option("--lambda", lambda_text, "Keep only this value: +1 or -1");
    enumerate->callback(
        [&] { rc = run_enumerate(length, domain_text, bound_text, lambda_text, as_json); });

    auto* frieze = app.add_subcommand("frieze", "Frieze pattern of a (-1)-quiddity cycle");
    frieze->add_option("cycle", cycle_text, "Comma-separated entries")->required();
    frieze->add_option("--periods", periods, "Stored periods of the pattern");
    frieze->add_option("--format", format_text, "ascii or csv");
    frieze->add_flag("--validate", validate, "Check all minor conditions and report");
    frieze->callback([&] { rc = run_frieze(cycle_text, periods, format_text, validate, as_json); });

    auto* catalog = app.add_subcommand("catalog", "Computed vs reference irreducible catalogs");
    catalog->add_option("--domain", domain_text, "z or nat0");
    catalog->add_option("--max-length", max_length, "Largest cycle length searched");
    catalog->add_option("--bound", bound_text, "Entry bound of the search box")->required();
    catalog->callback([&] { rc = run_catalog(domain_text, max_length, bound_text, as_json); });

    auto* check = app.add_subcommand("check", "Property suites over an enumerated sample pool");
    check->add_option("--samples", samples, "Samples per randomized suite");
    check->add_option("--seed", seed, "Random seed (default fixed for reproducibility)");
    check->add_option("--pool-length", pool_max_length, "Largest pool cycle length");
    check->add_option("--pool-bound", pool_bound, "Entry bound of the pool");
    check->callback(
        [&] { rc = run_check(samples, seed, pool_max_length, pool_bound, as_json); });

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DomainViolation& e) {
        std::cerr << "domain violation: " << e.what() << "\n";
        return 3;
    } catch (const TheoremViolation& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return rc;
}

#include "cli.hpp"

#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamecount/errors.hpp"
#include "tamecount/oracle.hpp"
#include "tamecount/qcount.hpp"
#include "tamecount/refine.hpp"
#include "tamecount/relation_graph.hpp"

namespace tamecount {

namespace {

using nlohmann::json;

json poly_terms_json(const QPolynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({it->first, it->second.str()});
    return terms;
}

bool is_composite(long long n) {
    return n > 1 && !nontrivial_divisors(n).empty();
}

int cmd_count(long long n, long long eval_q, const std::string& format,
              std::ostream& out, std::ostream& err) {
    if (eval_q > 0 && std::gcd(eval_q, n) != 1) {
        err << "error: tame case requires characteristic coprime to n ("
            << eval_q << " shares a factor with " << n << ")\n";
        return 2;
    }
    QPolynomial p = count_decomposables(n);
    if (format == "json") {
        json rec{{"n", n}, {"polynomial", p.str()}, {"terms", poly_terms_json(p)}};
        if (eval_q > 0)
            rec["eval"] = {{"q", eval_q}, {"value", p.eval(eval_q).str()}};
        out << rec.dump() << '\n';
    } else {
        out << p.str() << '\n';
        if (eval_q > 0) out << p.eval(eval_q).str() << '\n';
    }
    return 0;
}

int cmd_table(long long min_n, long long max_n, const std::string& format,
              std::ostream& out) {
    std::vector<long long> rows;
    for (long long n = min_n; n <= max_n; ++n)
        if (is_composite(n)) rows.push_back(n);
    if (format == "json") {
        json table = json::array();
        for (long long n : rows) {
            QPolynomial p = count_decomposables(n);
            table.push_back({{"n", n}, {"polynomial", p.str()}, {"terms", poly_terms_json(p)}});
        }
        out << table.dump() << '\n';
    } else if (format == "csv") {
        out << "n,polynomial\n";
        for (long long n : rows)
            out << n << ",\"" << count_decomposables(n).str() << "\"\n";
    } else {
        for (long long n : rows)
            out << n << ": " << count_decomposables(n).str() << '\n';
    }
    return 0;
}

int cmd_verify(long long n, long long q, const std::string& oracle, long long budget,
               std::ostream& out, std::ostream& err) {
    try {
        if (std::gcd(q, n) != 1) {
            err << "error: tame case requires characteristic coprime to n\n";
            return 2;
        }
        BigInt symbolic = count_decomposables(n).eval(q);
        bool ok = true;
        auto report = [&](const char* name, long long value) {
            bool match = symbolic == value;
            ok = ok && match;
            out << "n=" << n << " q=" << q << " symbolic=" << symbolic << ' ' << name
                << '=' << value << (match ? " PASS" : " FAIL") << '\n';
        };
        if (oracle == "exhaustive" || oracle == "both")
            report("exhaustive", exhaustive_decomposables(n, q, budget));
        if (oracle == "compositions" || oracle == "both")
            report("compositions", oracle_count_union(n, q, budget));
        return ok ? 0 : 3;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const WildCharacteristic& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_graph(long long n, const std::string& spec, bool dot, std::ostream& out,
              std::ostream& err) {
    std::vector<OrderedFactorization> D;
    std::stringstream parts(spec);
    std::string item;
    while (std::getline(parts, item, ';')) {
        OrderedFactorization f = OrderedFactorization::parse(item);
        if (f.n() != n) {
            err << "error: '" << item << "' is not a factorization of " << n << '\n';
            return 2;
        }
        D.push_back(std::move(f));
    }
    if (D.empty()) {
        err << "error: empty factorization list\n";
        return 2;
    }
    NormalizedSet norm = normalize(std::move(D));
    RelationGraph g = RelationGraph::build(norm);
    if (dot) {
        out << to_dot(g);
    } else {
        out << "normalized:";
        for (const auto& m : norm.members()) out << ' ' << m.str();
        out << "\nchain:";
        for (const RelationGraph& comp : scc_chain(g).components) {
            out << " {";
            for (std::size_t i = 0; i < comp.size(); ++i)
                out << (i ? "," : "") << comp.vertex(i).value << '#'
                    << comp.vertex(i).id;
            out << '}';
        }
        out << '\n';
    }
    return 0;
}

int cmd_refine(const std::string& ds, const std::string& es, std::ostream& out,
               std::ostream& err) {
    OrderedFactorization d = OrderedFactorization::parse(ds);
    OrderedFactorization e = OrderedFactorization::parse(es);
    if (d.n() != e.n()) {
        err << "error: products differ (" << d.n() << " vs " << e.n() << ")\n";
        return 2;
    }
    auto [de, ed] = refine_pair(d, e);
    out << de.str() << '\n' << ed.str() << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact counts of decomposable monic original polynomials (tame case)"};
    app.require_subcommand(1);

    long long n = 0, eval_q = 0, q = 0;
    long long min_n = 1, max_n = 50;
    long long budget = kDefaultBudget;
    std::string format = "text", oracle = "both", dspec, ds, es;
    bool dot = false;

    auto* count = app.add_subcommand("count", "#D_n as a polynomial in q");
    count->add_option("n", n, "degree")->required();
    count->add_option("--eval", eval_q, "also evaluate at a prime power q");
    count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "rows for all composite n in a range");
    table->add_option("--min", min_n);
    table->add_option("--max", max_n);
    table->add_option("--format", format)
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "compare the symbolic count to oracles");
    verify->add_option("n", n, "degree")->required();
    verify->add_option("q", q, "prime field size")->required();
    verify->add_option("--oracle", oracle)
        ->check(CLI::IsMember({"exhaustive", "compositions", "both"}));
    verify->add_option("--budget", budget, "max elementary compositions");

    auto* graph = app.add_subcommand("graph", "relation graph of a factorization set");
    graph->add_option("n", n, "degree")->required();
    graph->add_option("-D,--factorizations", dspec, "semicolon-separated sequences")
        ->required();
    graph->add_flag("--dot", dot, "DOT output");

    auto* refine = app.add_subcommand("refine", "pairwise refinement of two sequences");
    refine->add_option("d", ds, "first sequence")->required();
    refine->add_option("e", es, "second sequence")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(n, eval_q, format, out, err);
        if (table->parsed()) return cmd_table(min_n, max_n, format, out);
        if (verify->parsed()) return cmd_verify(n, q, oracle, budget, out, err);
        if (graph->parsed()) return cmd_graph(n, dspec, dot, out, err);
        if (refine->parsed()) return cmd_refine(ds, es, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace tamecount

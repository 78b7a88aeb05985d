// borel-cli: closures, Borel sort, T_min, fibers, quadrics and certificates.
// Exit codes: 0 ok / PASS, 1 FAIL or negative verdict, 2 input error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "borel/all.hpp"

namespace {

using namespace borel;

constexpr int kOk = 0, kFail = 1, kInput = 2, kCap = 3;

IdealFamily load_family(const std::string& path) {
  if (path == "-") return read_family(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_family(in);
}

std::vector<Exponent> parse_list(const std::string& text, const std::string& what) {
  std::vector<Exponent> out;
  std::size_t pos = 0;
  while (true) {
    out.push_back(detail::parse_uint<Exponent>(text, pos, 0, 0, what.c_str()));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in " + what, 0, pos + 1);
    ++pos;
  }
  return out;
}

// Shared by fiber-graph, verify and quadrics: a family file or one principal M.
struct Input {
  std::string family_path;
  std::string principal;
  std::size_t n = 0;
  std::string ring; // rees | fiber; default depends on the input
  std::string order;

  void add_to(CLI::App* sub) {
    sub->add_option("--family", family_path, "family file ('-' for stdin)");
    sub->add_option("--principal", principal, "single principal Borel generator M");
    sub->add_option("-n,--vars", n, "number of variables for --principal");
    sub->add_option("--ring", ring, "rees or fiber (default: rees for a family, fiber for --principal)")
        ->check(CLI::IsMember({"rees", "fiber"}));
    sub->add_option("--order", order, "term order: single or multi")->check(CLI::IsMember({"single", "multi"}));
  }

  bool is_family() const {
    if (family_path.empty() == principal.empty()) throw InvalidArgument("give exactly one of --family and --principal");
    if (!principal.empty() && n == 0) throw InvalidArgument("--principal needs -n");
    return !family_path.empty();
  }

  bool rees() const { return ring.empty() ? is_family() : ring == "rees"; }

  TermOrder term_order() const {
    if (order.empty()) return is_family() ? TermOrder::multi() : TermOrder::single();
    return order == "single" ? TermOrder::single() : TermOrder::multi();
  }

  // Context plus the matching quadric set.
  std::pair<ToricContext, std::vector<Binomial>> load() const {
    const TermOrder ord = term_order();
    if (!is_family() && !rees()) {
      Monomial M = parse_monomial(principal, n);
      return {ToricContext::principal(M, false), quadrics_single(M, ord)};
    }
    IdealFamily f = is_family() ? load_family(family_path) : IdealFamily::principal(parse_monomial(principal, n));
    QuadricSet q = quadrics_multi(f, ord);
    return {ToricContext::from_family(f, rees()), rees() ? q.all() : q.fiber()};
  }

  QuadricSet quadric_set() const {
    const TermOrder ord = term_order();
    if (!is_family() && !rees()) return QuadricSet{{}, quadrics_single(parse_monomial(principal, n), ord), {}};
    IdealFamily f = is_family() ? load_family(family_path) : IdealFamily::principal(parse_monomial(principal, n));
    QuadricSet q = quadrics_multi(f, ord);
    if (!rees()) q.symmetric.clear();
    return q;
  }
};

void print_quadrics(const std::string& title, const std::vector<Binomial>& bs) {
  std::cout << "# " << title << " (" << bs.size() << ")\n";
  for (const auto& b : bs) std::cout << to_string(b) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal Borel and L-Borel ideals: sorting, fibers and quadratic Groebner bases"};
  app.require_subcommand(1);
  int status = kOk;
  std::function<int()> run;

  // closure
  std::size_t cl_n = 0, cl_base = 1;
  std::string cl_support, cl_mono, cl_family, cl_ideal;
  auto* closure = app.add_subcommand("closure", "list Borel(M) or L-Borel(M), ascending grevlex");
  closure->add_option("-n,--vars", cl_n, "number of variables");
  closure->add_option("--support", cl_support, "linear support, e.g. x3,x4");
  closure->add_option("--index-base", cl_base, "index of the first variable (0 or 1)")->check(CLI::Range(0, 1));
  closure->add_option("--family", cl_family, "take the generator and support from a family file");
  closure->add_option("--ideal", cl_ideal, "entry name in --family");
  closure->add_option("monomial", cl_mono, "generator M");
  closure->callback([&] {
    run = [&] {
      std::vector<Monomial> out;
      if (!cl_family.empty()) {
        IdealFamily f = load_family(cl_family);
        std::size_t block = 0;
        for (std::size_t b = 1; b <= f.size(); ++b)
          if (f.entry(b).name == cl_ideal) block = b;
        if (block == 0) throw InvalidArgument("no ideal named '" + cl_ideal + "' in " + cl_family);
        out = f.generators(block);
        for (const auto& m : out) std::cout << to_string(m, cl_base) << "\n";
        return kOk;
      }
      if (cl_n == 0) throw InvalidArgument("closure needs -n");
      if (cl_mono.empty()) throw InvalidArgument("closure needs a monomial");
      Monomial M = parse_monomial(cl_mono, cl_n, cl_base);
      if (cl_support.empty()) {
        out = borel_closure(M);
      } else {
        std::vector<std::size_t> sup;
        std::stringstream ss(cl_support);
        std::string item;
        while (std::getline(ss, item, ',')) {
          Monomial v = parse_monomial(item, cl_n, cl_base);
          auto s = v.support();
          if (v.degree() != 1) throw InvalidArgument("support entries must be single variables: " + item);
          sup.push_back(s.front());
        }
        std::sort(sup.begin(), sup.end());
        out = lborel_closure(LinearPoset{sup}, M);
      }
      for (const auto& m : out) std::cout << to_string(m, cl_base) << "\n";
      return kOk;
    };
  });

  // sort
  std::size_t so_n = 0, so_base = 1;
  std::string so_M, so_mu;
  Exponent so_k = 0;
  bool so_grid = false;
  auto* sort = app.add_subcommand("sort", "Borel-sort mu into k factors from Borel(M)");
  sort->add_option("-n,--vars", so_n, "number of variables")->required();
  sort->add_option("--index-base", so_base, "index of the first variable (0 or 1)")->check(CLI::Range(0, 1));
  sort->add_flag("--grid", so_grid, "also print the exponent grid, one factor per row");
  sort->add_option("M", so_M, "principal generator")->required();
  sort->add_option("mu", so_mu, "monomial to factor")->required();
  sort->add_option("k", so_k, "number of factors")->required();
  sort->callback([&] {
    run = [&] {
      Monomial M = parse_monomial(so_M, so_n, so_base), mu = parse_monomial(so_mu, so_n, so_base);
      auto r = borel_sort(M, mu, so_k);
      for (const auto& f : r.factors) std::cout << to_string(f, so_base) << "\n";
      if (so_grid) {
        std::cout << "#";
        for (std::size_t i = 1; i <= so_n; ++i) std::cout << " x" << i - 1 + so_base;
        std::cout << "\n";
        for (const auto& f : r.factors) {
          for (std::size_t i = 1; i <= so_n; ++i) std::cout << (i == 1 ? "" : " ") << f.exponent(i);
          std::cout << "\n";
        }
      }
      return kOk;
    };
  });

  // tmin
  std::string tm_family, tm_mu, tm_beta;
  auto* tmin = app.add_subcommand("tmin", "greedy lex-least product over mu t^beta, or UNDEFINED");
  tmin->add_option("family", tm_family, "family file")->required();
  tmin->add_option("mu", tm_mu, "x-degree")->required();
  tmin->add_option("beta", tm_beta, "t-degrees, comma separated")->required();
  tmin->callback([&] {
    run = [&] {
      IdealFamily f = load_family(tm_family);
      auto t = t_min(f, parse_monomial(tm_mu, f.n), parse_list(tm_beta, "beta"));
      if (!t) {
        std::cout << "UNDEFINED\n";
        return kFail;
      }
      std::cout << side_text(*t) << "\n";
      return kOk;
    };
  });

  // fiber-graph
  Input fg_in;
  std::string fg_mu, fg_beta;
  bool fg_dot = false;
  Limits fg_limits;
  auto* fg = app.add_subcommand("fiber-graph", "fiber over x^mu t^beta and its graph under the quadrics");
  fg_in.add_to(fg);
  fg->add_option("--mu", fg_mu, "x-degree of the image")->required();
  fg->add_option("--beta", fg_beta, "t-degrees, comma separated (one entry per ideal)")->required();
  fg->add_flag("--dot", fg_dot, "emit Graphviz DOT");
  fg->add_option("--max-vertices", fg_limits.max_vertices, "vertex cap")->check(CLI::PositiveNumber);
  fg->add_option("--max-checks", fg_limits.max_checks, "divisibility check cap")->check(CLI::PositiveNumber);
  fg->callback([&] {
    run = [&] {
      auto [ctx, qs] = fg_in.load();
      const TermOrder ord = fg_in.term_order();
      Image img{parse_monomial(fg_mu, ctx.n()), parse_list(fg_beta, "beta")};
      auto g = fiber_graph(enumerate_fiber(ctx, img, ord, fg_limits), qs, ord, fg_limits);
      auto cert = certify(g);
      if (fg_dot) {
        std::cout << to_dot(g, qs);
      } else {
        std::cout << "# fiber over " << to_string(img, ctx) << ": " << g.vertices.size() << " vertices, "
                  << g.edges.size() << " edges\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i) std::cout << "v" << i << " " << to_string(g.vertices[i]) << "\n";
        for (const auto& e : g.edges)
          std::cout << "v" << e.from << " -> v" << e.to << " by " << to_string(qs[e.witness]) << "\n";
        std::cout << "sinks:";
        for (std::size_t s : cert.sinks) std::cout << " v" << s;
        std::cout << (cert.sinks.empty() ? " none\n" : "\n");
        std::cout << "connected: " << (cert.connected ? "yes" : "no") << "\n";
      }
      return kOk;
    };
  });

  // verify
  Input ve_in;
  bool ve_spairs = false, ve_fibers = false, ve_verbose = false;
  VerifyOptions ve_opt;
  auto* verify = app.add_subcommand("verify", "certify that the quadrics are a Groebner basis");
  ve_in.add_to(verify);
  verify->add_flag("--fibers", ve_fibers, "bounded fiber-graph certificate (default)");
  verify->add_flag("--spairs", ve_spairs, "binomial S-pair certificate");
  verify->add_option("--bound", ve_opt.bound, "total degree bound for --fibers")->check(CLI::Range(2, 64));
  verify->add_option("--jobs", ve_opt.jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--max-vertices", ve_opt.limits.max_vertices, "vertex cap per fiber")->check(CLI::PositiveNumber);
  verify->add_option("--max-checks", ve_opt.limits.max_checks, "check cap per fiber")->check(CLI::PositiveNumber);
  verify->add_flag("--verbose", ve_verbose, "one line per image");
  verify->callback([&] {
    run = [&] {
      if (ve_spairs && ve_fibers) throw InvalidArgument("choose one of --fibers and --spairs");
      auto [ctx, qs] = ve_in.load();
      const TermOrder ord = ve_in.term_order();
      if (ve_spairs) {
        auto rep = verify_groebner_by_spairs(qs, ord);
        std::cout << format_report(rep, qs);
        return rep.pass() ? kOk : kFail;
      }
      ve_opt.verbose = ve_verbose;
      auto rep = verify_groebner_by_fibers(ctx, qs, ord, ve_opt);
      std::cout << format_report(rep, ctx);
      return rep.pass() ? kOk : kFail;
    };
  });

  // lfree
  std::string lf_family, lf_matrix;
  bool lf_find = false, lf_chordal = false;
  auto* lfree = app.add_subcommand("lfree", "L-free test of the essential-variable incidence matrix");
  lfree->add_option("family", lf_family, "family file");
  lfree->add_option("--matrix", lf_matrix, "test a 0/1 matrix given as comma-separated rows instead");
  lfree->add_flag("--find-order", lf_find, "search for an L-free column order");
  lfree->add_flag("--chordal", lf_chordal, "test chordal bipartiteness");
  lfree->callback([&] {
    run = [&] {
      BiAdjacency m;
      if (!lf_matrix.empty()) {
        std::vector<std::string> rows;
        std::stringstream ss(lf_matrix);
        std::string row;
        while (std::getline(ss, row, ',')) rows.push_back(row);
        m = BiAdjacency::from_rows(rows);
      } else {
        if (lf_family.empty()) throw InvalidArgument("lfree needs a family file or --matrix");
        m = incidence_matrix(load_family(lf_family));
      }
      int rc = kOk;
      if (lf_find) {
        auto perm = find_lfree_column_order(m);
        if (perm) {
          std::cout << "LFREE order=(";
          for (std::size_t i = 0; i < perm->size(); ++i) std::cout << (i ? "," : "") << col_label(m, (*perm)[i]);
          std::cout << ")\n";
        } else {
          std::cout << "NOT-LFREE under every column order\n";
          rc = kFail;
        }
      }
      if (lf_chordal) {
        bool ok = is_chordal_bipartite(m);
        std::cout << (ok ? "CHORDAL-BIPARTITE\n" : "NOT-CHORDAL-BIPARTITE\n");
        if (!ok) rc = kFail;
      }
      if (!lf_find && !lf_chordal) {
        auto r = is_lfree(m);
        if (r.lfree) {
          std::cout << "LFREE\n";
        } else {
          const auto& w = *r.witness;
          std::cout << "NOT-LFREE witness rows=(" << row_label(m, w.h) << "," << row_label(m, w.j) << ") cols=("
                    << col_label(m, w.u) << "," << col_label(m, w.v) << ")\n";
          rc = kFail;
        }
      }
      return rc;
    };
  });

  // reduce
  std::string re_family;
  auto* reduce = app.add_subcommand("reduce", "strip constant factors and shrink supports to essential variables");
  reduce->add_option("family", re_family, "family file")->required();
  reduce->callback([&] {
    run = [&] {
      auto r = reduce_family(load_family(re_family));
      for (std::size_t b = 0; b < r.stripped.size(); ++b)
        std::cout << "# " << r.family.entries[b].name << " stripped " << to_string(r.stripped[b]) << "\n";
      std::cout << format_family(r.family);
      return kOk;
    };
  });

  // quadrics
  Input qu_in;
  auto* quad = app.add_subcommand("quadrics", "list the quadric generators, grouped by type");
  qu_in.add_to(quad);
  quad->callback([&] {
    run = [&] {
      QuadricSet q = qu_in.quadric_set();
      const TermOrder ord = qu_in.term_order();
      if (qu_in.rees()) print_quadrics("symmetric", q.symmetric);
      print_quadrics("fiber, one ideal", q.fiber_principal);
      if (qu_in.is_family()) print_quadrics("fiber, two ideals", q.fiber_biprincipal);
      std::cout << "# squarefree leads: " << (squarefree_leads(q.all(), ord) ? "yes" : "no") << "\n";
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    status = run();
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return status;
}

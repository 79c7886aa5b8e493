#include "coxsort/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "coxsort/alignment.hpp"
#include "coxsort/clusters.hpp"
#include "coxsort/coxeter_matrix.hpp"
#include "coxsort/enumeration.hpp"
#include "coxsort/errors.hpp"
#include "coxsort/noncrossing.hpp"
#include "coxsort/serialize.hpp"

namespace coxsort::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string group;
  std::string coxeter = "default";
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string element;
  bool sampled = false;
  int samples = 10000;
  bool parallel = false;
};

struct Session {
  CoxeterSystem system;
  CoxeterElement coxeter;

  explicit Session(const Options& opt)
      : system(CoxeterMatrix::from_name(opt.group)),
        coxeter(system, opt.coxeter == "default"
                            ? [&] {
                                ReducedWord w(system.rank());
                                for (int s = 0; s < system.rank(); ++s)
                                  w[s] = s;
                                return w;
                              }()
                            : parse_word(opt.coxeter)) {}

  Element element(const Options& opt) const {
    return Element::from_word(system, parse_word(opt.element));
  }
};

bool json_format(const Options& opt) { return opt.format == "json"; }

void emit(std::ostream& out, const Options& opt, const json& j,
          const std::function<void(std::ostream&)>& text) {
  if (json_format(opt))
    out << j.dump(2) << "\n";
  else
    text(out);
}

json cluster_json(const CoxeterSystem& sys, const Cluster& cl) {
  json arr = json::array();
  for (AlmostReflection t : cl) arr.push_back(almost_reflection_string(sys, t));
  return arr;
}

std::string cluster_text(const CoxeterSystem& sys, const Cluster& cl) {
  std::string out = "{";
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (i) out += ", ";
    out += almost_reflection_string(sys, cl[i]);
  }
  return out + "}";
}

int cmd_count(const Options& opt, std::ostream& out) {
  Session ses(opt);
  CountReport r = count_report(ses.coxeter);
  json j{{"group", opt.group},
         {"coxeter", word_string(ses.coxeter.word())},
         {"catalan", r.catalan},
         {"sortable", r.sortable_count},
         {"noncrossing", r.nc_count},
         {"clusters", r.cluster_count},
         {"positive_clusters", r.positive_catalan},
         {"full_support_sortables", r.full_support_sortables},
         {"narayana", r.narayana_by_descents},
         {"all_match", r.all_match}};
  emit(out, opt, j, [&](std::ostream& o) {
    o << "group " << opt.group << " coxeter "
      << word_string(ses.coxeter.word()) << "\n"
      << "catalan (formula)      " << r.catalan << "\n"
      << "sortable elements      " << r.sortable_count << "\n"
      << "noncrossing partitions " << r.nc_count << "\n"
      << "clusters               " << r.cluster_count << "\n"
      << "positive clusters      " << r.positive_catalan << "\n"
      << "full-support sortables " << r.full_support_sortables << "\n";
    o << "narayana";
    for (long long v : r.narayana_by_descents) o << " " << v;
    o << "\n" << (r.all_match ? "all counts match" : "COUNTS DISAGREE")
      << "\n";
  });
  return r.all_match ? 0 : 3;
}

int cmd_sortable_list(const Options& opt, std::ostream& out) {
  Session ses(opt);
  std::vector<Element> sortables = enumerate_sortables(ses.coxeter);
  json arr = json::array();
  for (const Element& w : sortables) arr.push_back(element_string(w));
  emit(out, opt, json{{"sortables", arr}}, [&](std::ostream& o) {
    for (const Element& w : sortables) o << element_string(w) << "\n";
  });
  return 0;
}

int cmd_sortable_check(const Options& opt, std::ostream& out) {
  Session ses(opt);
  bool ok = is_sortable(ses.element(opt), ses.coxeter);
  emit(out, opt, json{{"element", opt.element}, {"sortable", ok}},
       [&](std::ostream& o) { o << (ok ? "sortable" : "not sortable") << "\n"; });
  return 0;
}

int cmd_nc_map(const Options& opt, std::ostream& out) {
  Session ses(opt);
  Element w = ses.element(opt);
  if (!is_sortable(w, ses.coxeter))
    throw NotSortable("the noncrossing map is defined on sortable elements");
  Element x = nc_map(w, ses.coxeter);
  emit(out, opt, json{{"element", element_string(w)},
                      {"image", element_string(x)},
                      {"rank", absolute_length(x)}},
       [&](std::ostream& o) { o << element_string(x) << "\n"; });
  return 0;
}

int cmd_nc_inverse(const Options& opt, std::ostream& out) {
  Session ses(opt);
  Element w = nc_inverse(ses.element(opt), ses.coxeter);
  emit(out, opt, json{{"element", opt.element}, {"preimage", element_string(w)}},
       [&](std::ostream& o) { o << element_string(w) << "\n"; });
  return 0;
}

int cmd_nc_interval(const Options& opt, std::ostream& out) {
  Session ses(opt);
  std::vector<NCPartition> interval = nc_interval(ses.coxeter);
  json arr = json::array();
  for (const NCPartition& x : interval) {
    json gens = json::array();
    for (int t : x.canonical_generators)
      gens.push_back(reflection_string(ses.system, t));
    arr.push_back(json{{"element", element_string(x.element)},
                       {"rank", x.rank},
                       {"generators", gens}});
  }
  emit(out, opt, json{{"interval", arr}}, [&](std::ostream& o) {
    for (const NCPartition& x : interval) {
      o << x.rank << " " << element_string(x.element) << " [";
      for (std::size_t i = 0; i < x.canonical_generators.size(); ++i) {
        if (i) o << ", ";
        o << reflection_string(ses.system, x.canonical_generators[i]);
      }
      o << "]\n";
    }
  });
  return 0;
}

int cmd_cluster_list(const Options& opt, std::ostream& out) {
  Session ses(opt);
  std::vector<Cluster> clusters = enumerate_clusters(ses.coxeter, opt.parallel);
  json arr = json::array();
  for (const Cluster& cl : clusters)
    arr.push_back(cluster_json(ses.system, cl));
  emit(out, opt, json{{"clusters", arr}}, [&](std::ostream& o) {
    for (const Cluster& cl : clusters)
      o << cluster_text(ses.system, cl) << "\n";
  });
  return 0;
}

int cmd_cluster_map(const Options& opt, std::ostream& out) {
  Session ses(opt);
  Cluster cl = cl_map(ses.element(opt), ses.coxeter);
  emit(out, opt,
       json{{"element", opt.element}, {"cluster", cluster_json(ses.system, cl)}},
       [&](std::ostream& o) { o << cluster_text(ses.system, cl) << "\n"; });
  return 0;
}

int cmd_orient(const Options& opt, std::ostream& out) {
  Session ses(opt);
  std::vector<int> order = reflection_order(ses.coxeter);
  json edges = json::array();
  std::vector<std::pair<std::string, std::string>> lines;
  for (const RankTwoParabolic& p : ses.system.rank_two_parabolics()) {
    if (!p.irreducible) continue;
    bool inside = true;
    for (int t : p.reflections)
      inside = inside && ses.system.root_in_parabolic(t, ses.coxeter.support());
    if (!inside) continue;
    OrientationEdge e = orient(ses.coxeter, p);
    std::string src = reflection_string(ses.system, e.source);
    std::string dst = reflection_string(ses.system, e.target);
    edges.push_back(json{{"source", src}, {"target", dst}});
    lines.emplace_back(src, dst);
  }
  json ord = json::array();
  for (int t : order) ord.push_back(reflection_string(ses.system, t));
  emit(out, opt, json{{"reflection_order", ord}, {"orientation", edges}},
       [&](std::ostream& o) {
         o << "reflection order:";
         for (int t : order) o << " " << reflection_string(ses.system, t);
         o << "\n";
         for (auto& [src, dst] : lines) o << src << " -> " << dst << "\n";
       });
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  Session ses(opt);
  VerifyOptions vopts;
  vopts.mode = opt.sampled ? VerifyMode::Sampled : VerifyMode::Exhaustive;
  vopts.seed = opt.seed;
  vopts.sample_size = opt.samples;
  vopts.parallel = opt.parallel;
  VerifyReport report = verify_all(ses.coxeter, vopts);
  json arr = json::array();
  for (const CheckResult& c : report.checks)
    arr.push_back(json{{"name", c.name},
                       {"passed", c.passed},
                       {"cases", c.cases},
                       {"witness", c.witness}});
  emit(out, opt, json{{"checks", arr}, {"all_passed", report.all_passed()}},
       [&](std::ostream& o) {
         for (const CheckResult& c : report.checks) {
           if (c.passed)
             o << "PASS " << c.name << " (" << c.cases << " cases)\n";
           else
             o << "FAIL " << c.name << ": " << c.witness << "\n";
         }
       });
  return report.all_passed() ? 0 : 3;
}

int cmd_degrees(const Options& opt, std::ostream& out) {
  Session ses(opt);
  Degrees d = degrees(ses.system);
  json comps = json::array();
  for (const ComponentDegrees& comp : d.components)
    comps.push_back(json{{"simples", comp.simples},
                         {"coxeter_number", comp.h},
                         {"exponents", comp.exponents}});
  emit(out, opt,
       json{{"components", comps}, {"catalan", catalan_formula(d)}},
       [&](std::ostream& o) {
         for (const ComponentDegrees& comp : d.components) {
           o << "component";
           for (int s : comp.simples) o << " " << s;
           o << " h=" << comp.h << " exponents";
           for (int e : comp.exponents) o << " " << e;
           o << "\n";
         }
         o << "catalan " << catalan_formula(d) << "\n";
       });
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sortable elements, noncrossing partitions and clusters in "
               "finite Coxeter groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--group", opt.group, "Group name, e.g. A3, B4, I2(7)")
      ->required();
  app.add_option("--coxeter", opt.coxeter,
                 "Coxeter word, e.g. 0,1,2 (default: all letters in order)");
  app.add_option("--format", opt.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Seed for sampled verification");

  int which = 0;
  auto element_opt = [&](CLI::App* sub) {
    sub->add_option("element", opt.element, "Element as a word, or e")
        ->required();
  };

  CLI::App* count = app.add_subcommand("count", "Enumerate and cross-check");
  count->callback([&] { which = 1; });

  CLI::App* sortable = app.add_subcommand("sortable", "Sortable elements");
  CLI::App* slist = sortable->add_subcommand("list", "List sortable elements");
  slist->callback([&] { which = 2; });
  CLI::App* scheck = sortable->add_subcommand("check", "Test one element");
  element_opt(scheck);
  scheck->callback([&] { which = 3; });
  sortable->require_subcommand(1);

  CLI::App* nc = app.add_subcommand("nc", "Noncrossing partitions");
  CLI::App* nmap = nc->add_subcommand("map", "Image of a sortable element");
  element_opt(nmap);
  nmap->callback([&] { which = 4; });
  CLI::App* ninv = nc->add_subcommand("inverse", "Preimage of a partition");
  element_opt(ninv);
  ninv->callback([&] { which = 5; });
  CLI::App* nint = nc->add_subcommand("interval", "The absolute-order interval");
  nint->callback([&] { which = 6; });
  nc->require_subcommand(1);

  CLI::App* cluster = app.add_subcommand("cluster", "Clusters");
  CLI::App* clist = cluster->add_subcommand("list", "List clusters");
  clist->add_flag("--parallel", opt.parallel, "Build the graph in parallel");
  clist->callback([&] { which = 7; });
  CLI::App* cmap = cluster->add_subcommand("map", "Cluster of a sortable");
  element_opt(cmap);
  cmap->callback([&] { which = 8; });
  cluster->require_subcommand(1);

  CLI::App* orient_cmd =
      app.add_subcommand("orient", "Rank-two orientation data");
  orient_cmd->callback([&] { which = 9; });

  CLI::App* verify = app.add_subcommand("verify", "Run the cross-check battery");
  std::string mode;
  verify->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_flag("--sampled", opt.sampled, "Sample elements instead");
  verify->add_option("--samples", opt.samples, "Sample count");
  verify->add_flag("--parallel", opt.parallel, "Also run parallel kernels");
  verify->callback([&] {
    which = 10;
    if (mode == "sampled") opt.sampled = true;
  });

  CLI::App* deg = app.add_subcommand("degrees", "Degrees and exponents");
  deg->callback([&] { which = 11; });

  // Global flags may appear after the subcommand, as in
  // `sortable check 1,0 --group B2 --coxeter 0,1`.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested :
         sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    switch (which) {
      case 1:
        return cmd_count(opt, out);
      case 2:
        return cmd_sortable_list(opt, out);
      case 3:
        return cmd_sortable_check(opt, out);
      case 4:
        return cmd_nc_map(opt, out);
      case 5:
        return cmd_nc_inverse(opt, out);
      case 6:
        return cmd_nc_interval(opt, out);
      case 7:
        return cmd_cluster_list(opt, out);
      case 8:
        return cmd_cluster_map(opt, out);
      case 9:
        return cmd_orient(opt, out);
      case 10:
        return cmd_verify(opt, out);
      case 11:
        return cmd_degrees(opt, out);
      default:
        err << "no subcommand selected\n";
        return 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coxsort::cli

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srl/constructions.hpp"
#include "srl/cyclotomy.hpp"
#include "srl/enumeration.hpp"
#include "srl/io.hpp"
#include "srl/paper_suite.hpp"
#include "srl/schurity.hpp"

using namespace srl;

namespace {

SRing family_ring(const std::string& family, int p) {
  if (family == "d8zp") return d8_zp_sring(p);
  if (family == "q8zp-l4") return q8_zp_l4(p);
  if (family == "q8zp-l6") return q8_zp_l6(p);
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::vector<std::vector<int>> load_partition(const std::string& path) {
  if (path.empty() || path == "-") return read_partition(std::cin);
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open partition file '" + path + "'");
  return read_partition(in);
}

// Ring from either a family name (prime from --p, or inferred from the
// group spec's order) or a partition file over the given group.
SRing resolve_ring(const std::string& spec, const std::string& family, int p,
                   const std::string& part) {
  if (!family.empty()) {
    int pp = p;
    if (pp <= 0) {
      if (spec.empty())
        throw std::invalid_argument("--family needs --p or --group");
      pp = parse_group_spec(spec).order() / 8;
    }
    SRing a = family_ring(family, pp);
    if (!spec.empty() &&
        parse_group_spec(spec).order() != a.group().order())
      throw std::invalid_argument("group spec does not match the family order");
    return a;
  }
  if (spec.empty())
    throw std::invalid_argument("need --group together with --partition");
  Group g = parse_group_spec(spec);
  return SRing::from_partition(g, load_partition(part));
}

// Environment wins over flags so wrapper scripts can pin budgets.
void apply_env_overrides() {
  if (const char* v = std::getenv("SRL_MAX_ORDER"))
    limits().max_enum_order = std::stoi(v);
  if (const char* v = std::getenv("SRL_TIME_BUDGET_SECS"))
    limits().time_budget_secs = std::stod(v);
  if (const char* v = std::getenv("SRL_THREADS"))
    limits().threads = std::stoi(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-ring construction, verification and schurity reports"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  int max_order = -1, threads = -1;
  double time_budget = -1.0;
  app.add_flag("--json", json, "emit reports as JSON instead of key=value lines");
  app.add_option("--max-order", max_order,
                 "group order cap for enumeration (env SRL_MAX_ORDER overrides)");
  app.add_option("--time-budget-secs", time_budget,
                 "search time budget (env SRL_TIME_BUDGET_SECS overrides)");
  app.add_option("--threads", threads,
                 "worker threads, 0 = hardware (env SRL_THREADS overrides)");

  std::string spec, family, partition = "-";
  int p = 0, l = 0, pmax = 200;
  std::string expect;

  CLI::App* cmd_group = app.add_subcommand("group", "dump a group's multiplication table");
  cmd_group->add_option("spec", spec, "group spec, e.g. D8xC5")->required();

  CLI::App* cmd_construct =
      app.add_subcommand("construct", "emit a family partition, one class per line");
  cmd_construct->add_option("family", family, "d8zp | q8zp-l4 | q8zp-l6")->required();
  cmd_construct->add_option("--p", p, "fiber prime")->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "check the S-ring axioms for a partition");
  cmd_verify->add_option("--group", spec, "group spec")->required();
  cmd_verify->add_option("--partition", partition, "partition file, - for stdin");

  CLI::App* cmd_constants =
      app.add_subcommand("constants", "structure constants of an S-ring");
  cmd_constants->add_option("--group", spec, "group spec");
  cmd_constants->add_option("--partition", partition, "partition file, - for stdin");
  cmd_constants->add_option("--family", family, "d8zp | q8zp-l4 | q8zp-l6");
  cmd_constants->add_option("--p", p, "fiber prime");

  CLI::App* cmd_autgroup =
      app.add_subcommand("autgroup", "automorphism group of an S-ring");
  cmd_autgroup->add_option("--group", spec, "group spec");
  cmd_autgroup->add_option("--partition", partition, "partition file, - for stdin");
  cmd_autgroup->add_option("--family", family, "d8zp | q8zp-l4 | q8zp-l6");
  cmd_autgroup->add_option("--p", p, "fiber prime");

  CLI::App* cmd_schurity =
      app.add_subcommand("schurity", "schurity verdict for an S-ring");
  cmd_schurity->add_option("--group", spec, "group spec");
  cmd_schurity->add_option("--partition", partition, "partition file, - for stdin");
  cmd_schurity->add_option("--family", family, "d8zp | q8zp-l4 | q8zp-l6");
  cmd_schurity->add_option("--p", p, "fiber prime");
  cmd_schurity->add_option("--expect", expect, "schurian | nonschurian; mismatch exits 1");

  CLI::App* cmd_census =
      app.add_subcommand("census", "enumerate all S-rings and count schurity");
  cmd_census->add_option("--group", spec, "group spec")->required();
  cmd_census->add_flag("--expect-schur", "exit 1 if any nonschurian ring appears");

  CLI::App* cmd_cyclotomy =
      app.add_subcommand("cyclotomy", "verify the residue-class identities");
  cmd_cyclotomy->add_option("--l", l, "4 or 6")->required();
  cmd_cyclotomy->add_option("--pmax", pmax, "sweep primes below this bound");

  CLI::App* cmd_suite =
      app.add_subcommand("paper-suite", "run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (max_order > 0) limits().max_enum_order = max_order;
  if (time_budget > 0) limits().time_budget_secs = time_budget;
  if (threads >= 0) limits().threads = threads;
  apply_env_overrides();

  int exit_code = 0;
  try {
    std::vector<Record> recs;
    if (app.got_subcommand(cmd_group)) {
      Group g = parse_group_spec(spec);
      if (json) {
        nlohmann::ordered_json j;
        j["label"] = g.label();
        j["order"] = g.order();
        auto& rows = j["table"] = nlohmann::ordered_json::array();
        for (int x = 0; x < g.order(); ++x) {
          auto row = nlohmann::ordered_json::array();
          for (int y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
          rows.push_back(std::move(row));
        }
        std::cout << j.dump(2) << "\n";
      } else {
        write_group_table(std::cout, g);
      }
    } else if (app.got_subcommand(cmd_construct)) {
      SRing a = family_ring(family, p);
      if (json) {
        nlohmann::ordered_json j;
        j["family"] = family;
        j["p"] = p;
        j["rank"] = a.rank();
        j["classes"] = a.basic_sets();
        std::cout << j.dump(2) << "\n";
      } else {
        write_partition(std::cout, a.basic_sets());
      }
    } else if (app.got_subcommand(cmd_verify)) {
      Group g = parse_group_spec(spec);
      PartitionViolation why;
      auto ring = SRing::try_from_partition(g, load_partition(partition), &why);
      Record r;
      r.put("group", spec);
      r.put("valid", ring.has_value());
      if (ring) {
        r.put("rank", ring->rank());
      } else {
        r.put("axiom", why.axiom);
        r.put("witness", why.witness);
        exit_code = 1;
      }
      recs.push_back(std::move(r));
      print_records(std::cout, recs, json);
    } else if (app.got_subcommand(cmd_constants)) {
      SRing a = resolve_ring(spec, family, p, partition);
      const StructureConstants& sc = a.structure_constants();
      Record head;
      head.put("group", a.group().label());
      head.put("order", a.group().order());
      head.put("rank", a.rank());
      recs.push_back(std::move(head));
      for (int x = 0; x < a.rank(); ++x)
        for (int y = 0; y < a.rank(); ++y)
          for (int z = 0; z < a.rank(); ++z)
            if (sc.c(x, y, z)) {
              Record r;
              r.put("x", x);
              r.put("y", y);
              r.put("z", z);
              r.put("c", sc.c(x, y, z));
              recs.push_back(std::move(r));
            }
      print_records(std::cout, recs, json);
    } else if (app.got_subcommand(cmd_autgroup)) {
      SRing a = resolve_ring(spec, family, p, partition);
      SRingAutData data = automorphism_group_data(a);
      Record r;
      r.put("group", a.group().label());
      r.put("degree", a.group().order());
      r.put("rank", a.rank());
      r.put("aut_order", data.aut.order());
      r.put("stabilizer_order", data.stabilizer.order());
      r.put("stabilizer_orbits", static_cast<int>(data.stabilizer.orbits().size()));
      recs.push_back(std::move(r));
      for (const Perm& q : data.aut.generators()) {
        Record gr;
        gr.put("gen", join_ints(q.images()));
        recs.push_back(std::move(gr));
      }
      print_records(std::cout, recs, json);
    } else if (app.got_subcommand(cmd_schurity)) {
      SRing a = resolve_ring(spec, family, p, partition);
      SchurityReport rep = schurity_report(a);
      Record r;
      r.put("group", a.group().label());
      r.put("rank", a.rank());
      r.put("verdict", rep.schurian ? "schurian" : "nonschurian");
      r.put("aut_order", rep.aut_order);
      r.put("stabilizer_orbits", static_cast<int>(rep.stabilizer_orbits.size()));
      if (!rep.schurian) {
        r.put("split_class", join_ints(a.basic_set(rep.split_class)));
        r.put("split_pieces", join_classes(rep.split_pieces));
      }
      recs.push_back(std::move(r));
      print_records(std::cout, recs, json);
      if (!expect.empty() &&
          expect != (rep.schurian ? "schurian" : "nonschurian"))
        exit_code = 1;
    } else if (app.got_subcommand(cmd_census)) {
      Group g = parse_group_spec(spec);
      CensusReport rep = schurity_census(g, spec);
      Record r;
      r.put("group", rep.label);
      r.put("total", rep.total);
      r.put("schurian", rep.schurian);
      r.put("nonschurian", rep.nonschurian);
      std::string hist;
      for (const auto& [rank, cnt] : rep.rank_histogram) {
        if (!hist.empty()) hist += ',';
        hist += std::to_string(rank) + ":" + std::to_string(cnt);
      }
      r.put("rank_histogram", hist);
      recs.push_back(std::move(r));
      print_records(std::cout, recs, json);
      if (cmd_census->count("--expect-schur") && rep.nonschurian > 0)
        exit_code = 1;
    } else if (app.got_subcommand(cmd_cyclotomy)) {
      if (l != 4 && l != 6) throw std::invalid_argument("--l must be 4 or 6");
      for (const CyclotomicReport& cr : cyclotomy_sweep(pmax, l, limits().threads)) {
        Record r;
        r.put("p", cr.p);
        r.put("l", cr.l);
        r.put("m", cr.m);
        r.put("parity", cr.m_even ? "even" : "odd");
        if (!cr.m_even) r.put("m_value", cr.m_value);
        if (cr.m_even || cr.l == 6) {
          r.put("s", cr.s);
          if (cr.l == 6) {
            r.put("t", cr.t);
            r.put("u", cr.u);
            r.put("alternative", cr.alternative);
          }
        }
        if (cr.r_abs >= 0) r.put("r_abs", cr.r_abs);
        r.put("ok", true);
        recs.push_back(std::move(r));
      }
      print_records(std::cout, recs, json);
    } else if (app.got_subcommand(cmd_suite)) {
      for (const CriterionResult& cr : paper_suite()) {
        Record r;
        r.put("criterion", cr.index);
        r.put("pass", cr.pass);
        r.put("name", cr.name);
        r.put("detail", cr.detail);
        recs.push_back(std::move(r));
        if (!cr.pass) exit_code = 1;
      }
      print_records(std::cout, recs, json);
    }
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

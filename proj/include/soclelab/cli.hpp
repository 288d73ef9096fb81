#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "soclelab/corpus.hpp"
#include "soclelab/json_io.hpp"
#include "soclelab/soclelab.hpp"

namespace soclelab::cli {

struct cli_config {
  caps limits;
  std::string format = "text";  // text | json
  bool color = false;
  bool timing = true;
  std::size_t jobs = 1;
};

namespace detail {

inline std::string paint(const cli_config& cfg, const char* code, const std::string& s) {
  if (!cfg.color) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::input_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline finite_poset load_poset(const std::string& file, const std::string& builtin) {
  if (!file.empty()) {
    finite_poset p = poset_from_json_text(read_file(file));
    p.set_name(std::filesystem::path(file).stem().string());
    return p;
  }
  return builtin_poset(builtin);
}

inline void print_elements(std::ostream& out, const char* label,
                           const std::vector<std::string>& xs) {
  out << label << ":";
  for (const auto& x : xs) out << " " << x;
  out << "\n";
}

// ---- poset-info -------------------------------------------------------------

inline int cmd_poset_info(const cli_config& cfg, const finite_poset& p, std::ostream& out) {
  const auto mins = p.min_elements();
  const auto maxs = p.max_elements();
  const auto yz = yz_decompose(p);
  if (cfg.format == "json") {
    json j = poset_to_json(p);
    j["name"] = p.name();
    j["reduced_input"] = p.input_was_reduced();
    j["min"] = mins;
    j["max"] = maxs;
    j["min_is_maximal_antichain"] = p.is_maximal_antichain(mins);
    j["max_is_maximal_antichain"] = p.is_maximal_antichain(maxs);
    json counts = json::array();
    for (const auto& l : p.labels())
      counts.push_back(json{{"element", l},
                            {"up_set_size", p.up_set_size(l)},
                            {"down_set_size", p.down_set_size(l)}});
    j["set_sizes"] = counts;
    j["reachable_part"] = yz.y_part;
    j["unreachable_part"] = yz.z_part;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "poset " << p.name() << ": " << p.size() << " elements\n";
  print_elements(out, "elements", p.labels());
  out << "covers:";
  for (const auto& [a, b] : p.hasse_labels()) out << " " << a << "<" << b;
  out << "\n";
  out << "reduced input: " << (p.input_was_reduced() ? "yes" : "no") << "\n";
  print_elements(out, "Min", mins);
  print_elements(out, "Max", maxs);
  out << "up/down set sizes:\n";
  for (const auto& l : p.labels())
    out << "  " << l << ": |up|=" << p.up_set_size(l) << " |down|=" << p.down_set_size(l)
        << "\n";
  out << "Min is a maximal antichain: " << (p.is_maximal_antichain(mins) ? "yes" : "no")
      << "\n";
  out << "Max is a maximal antichain: " << (p.is_maximal_antichain(maxs) ? "yes" : "no")
      << "\n";
  print_elements(out, "reachable part Y", yz.y_part);
  print_elements(out, "unreachable part Z", yz.z_part);
  return 0;
}

// ---- ring-info --------------------------------------------------------------

inline std::string ideal_inline(const sided_ideal& I, std::size_t max_items = 8) {
  std::string s = "{";
  std::size_t shown = 0;
  for (elem e : I.elements()) {
    if (shown == max_items) {
      s += ", ...";
      break;
    }
    if (shown) s += ", ";
    s += I.ring->describe(e);
    ++shown;
  }
  return s + "} (" + std::to_string(I.count()) + " elements)";
}

inline int cmd_ring_info(const cli_config& cfg, const std::string& spec, std::ostream& out) {
  ring_ptr R = parse_ring_spec(spec, cfg.limits);
  principal_table ptl(R, side::left), ptr(R, side::right);
  const auto socl = socle(R, side::left, &ptl);
  const auto socr = socle(R, side::right, &ptr);
  const auto singl = singular_ideal(R, side::left, &ptl);
  const auto singr = singular_ideal(R, side::right, &ptr);
  const auto minl = minimal_ideals(R, side::left, &ptl);
  const auto minr = minimal_ideals(R, side::right, &ptr);
  if (cfg.format == "json") {
    json j;
    j["ring"] = R->name();
    j["size"] = R->size();
    j["socle_left"] = ideal_to_json(socl);
    j["socle_right"] = ideal_to_json(socr);
    j["singular_left"] = ideal_to_json(singl);
    j["singular_right"] = ideal_to_json(singr);
    j["minimal_left_ideals"] = minl.size();
    j["minimal_right_ideals"] = minr.size();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "ring " << R->name() << ": " << R->size() << " elements\n";
  out << "left socle: " << ideal_inline(socl) << "\n";
  out << "right socle: " << ideal_inline(socr) << "\n";
  out << "left singular ideal: " << ideal_inline(singl) << "\n";
  out << "right singular ideal: " << ideal_inline(singr) << "\n";
  out << "minimal left ideals: " << minl.size() << "\n";
  out << "minimal right ideals: " << minr.size() << "\n";
  return 0;
}

// ---- incidence --------------------------------------------------------------

inline int cmd_incidence(const cli_config& cfg, const std::string& compute,
                         const finite_poset& X, const std::string& spec, side s,
                         std::ostream& out) {
  ring_ptr R = parse_ring_spec(spec, cfg.limits);
  algebra_ptr A = make_incidence_algebra(X, R, cfg.limits);
  if (A->size() > cfg.limits.enumeration_cap)
    fail(errc::enumeration_cap_exceeded,
         A->name() + " has " + std::to_string(A->size()) +
             " elements, enumeration cap is " + std::to_string(cfg.limits.enumeration_cap));
  principal_table pt(A, s);
  const sided_ideal I =
      compute == "socle" ? socle(A, s, &pt) : singular_ideal(A, s, &pt);
  const render_matrix overlay = render_structure(A, &I);
  if (cfg.format == "json") {
    json j;
    j["algebra"] = A->name();
    j["size"] = A->size();
    j["compute"] = compute;
    j["ideal"] = ideal_to_json(I);
    j["overlay"] = render_matrix_to_json(overlay);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << A->name() << ": " << A->size() << " elements\n";
  out << side_name(s) << " " << compute << ": " << I.count() << " elements\n";
  out << to_compact(overlay) << "\n";
  out << to_text(overlay);
  return 0;
}

// ---- render -----------------------------------------------------------------

inline int cmd_render(const cli_config& cfg, const finite_poset& X,
                      const std::string& render_format, std::ostream& out) {
  if (render_format == "dot") {
    out << to_dot(X);
    return 0;
  }
  // Text structural matrix with a symbolic base ring; a two-element stand-in
  // ring gives the R/0 pattern without building anything big.
  caps limits = cfg.limits;
  ring_ptr F2 = make_prime_field(2, limits);
  algebra_ptr A = make_incidence_algebra(X, F2, limits);
  out << to_text(render_structure(A));
  return 0;
}

// ---- verify -----------------------------------------------------------------

inline void print_report_text(const cli_config& cfg, const verification_report& rep,
                              std::ostream& out) {
  for (const auto& inst : rep.instances) {
    out << inst.poset_name << " / " << inst.ring_name << "\n";
    if (!inst.input_error.empty()) {
      out << "  " << paint(cfg, "31", "input error") << ": " << inst.input_error << "\n";
      continue;
    }
    for (const auto& c : inst.checks) {
      std::string tag;
      switch (c.status) {
        case check_status::pass: tag = paint(cfg, "32", "pass"); break;
        case check_status::fail: tag = paint(cfg, "31", "FAIL"); break;
        default: tag = paint(cfg, "33", status_name(c.status)); break;
      }
      out << "  [" << tag << "] " << c.id;
      if (cfg.timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.1f ms)", c.elapsed_ms);
        out << buf;
      }
      out << "\n";
      if (c.status == check_status::fail) {
        out << "      " << c.witness.summary << "\n";
        for (const auto& d : c.witness.details) out << "      " << d << "\n";
      }
    }
  }
  out << "summary: " << rep.passed << " passed, " << rep.failed << " failed, "
      << rep.skipped << " skipped\n";
}

inline int report_exit_code(const verification_report& rep) {
  if (rep.any_input_error) return 2;
  if (rep.failed > 0) return 1;
  if (rep.any_caps_hit) return 3;
  return 0;
}

}  // namespace detail

/// In-process CLI entry point; argv[0] is the program name. Returns the
/// process exit code.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  cli_config cfg;
  CLI::App app{"finite incidence-algebra laboratory: socles, singular ideals, and "
               "brute-force verification of their closed forms"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--color,!--no-color", cfg.color, "colorize text output");
  app.add_flag("--timing,!--no-timing", cfg.timing,
               "include wall-clock timings in reports (disable for byte-stable output)");
  app.add_option("--seed", cfg.limits.seed, "sampling seed")
      ->envname("SOCLE_LAB_SEED")
      ->capture_default_str();
  app.add_option("--enum-cap", cfg.limits.enumeration_cap,
                 "largest algebra that brute-force scans will enumerate")
      ->envname("SOCLE_LAB_ENUM_CAP")
      ->capture_default_str();
  app.add_option("--oracle-cap", cfg.limits.oracle_cap,
                 "largest ring for all-ideal enumeration")
      ->envname("SOCLE_LAB_ORACLE_CAP")
      ->capture_default_str();
  app.add_option("--table-cap", cfg.limits.table_cap,
                 "largest ring that caches full arithmetic tables")
      ->envname("SOCLE_LAB_TABLE_CAP")
      ->capture_default_str();
  app.add_option("--timeout", cfg.limits.timeout_s, "per-check time budget in seconds")
      ->envname("SOCLE_LAB_TIMEOUT_S")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "parallel instance workers")->capture_default_str();

  // poset-info
  std::string pi_file;
  auto* pi = app.add_subcommand("poset-info", "order-theoretic summary of a poset file");
  pi->add_option("file", pi_file, "poset JSON file")->required();

  // ring-info
  std::string ri_spec;
  auto* ri = app.add_subcommand("ring-info", "socles and singular ideals of a base ring");
  ri->add_option("spec", ri_spec, "ring spec, e.g. Z4, U2(F2), F2 x F2")->required();

  // incidence
  std::string in_compute, in_poset_file, in_builtin = "vee", in_ring, in_side = "left";
  auto* inc = app.add_subcommand("incidence",
                                 "compute an ideal of I(X, R) by brute force and render it");
  inc->add_option("compute", in_compute, "what to compute")
      ->check(CLI::IsMember({"socle", "singular"}))
      ->required();
  auto* inc_poset = inc->add_option("--poset", in_poset_file, "poset JSON file");
  inc->add_option("--builtin", in_builtin, "bundled poset name")
      ->capture_default_str()
      ->excludes(inc_poset);
  inc->add_option("--ring", in_ring, "base ring spec")->required();
  inc->add_option("--side", in_side, "side")->check(CLI::IsMember({"left", "right"}));

  // verify
  std::string v_poset_file, v_builtin, v_corpus_dir, v_ring, v_theorem;
  bool v_all = false;
  auto* ver = app.add_subcommand("verify", "run the theorem checks and report");
  auto* ver_poset = ver->add_option("--poset", v_poset_file, "poset JSON file");
  auto* ver_builtin =
      ver->add_option("--builtin", v_builtin, "bundled poset name")->excludes(ver_poset);
  ver->add_option("--corpus", v_corpus_dir, "directory of poset JSON files")
      ->excludes(ver_poset)
      ->excludes(ver_builtin);
  ver->add_option("--ring", v_ring, "base ring spec");
  auto* ver_theorem = ver->add_option("--theorem", v_theorem, "run a single check id");
  ver->add_flag("--all", v_all, "run every registered check (default)")
      ->excludes(ver_theorem);

  // render
  std::string r_poset_file, r_builtin, r_format = "text";
  auto* ren = app.add_subcommand("render", "Hasse DOT or structural matrix");
  auto* ren_poset = ren->add_option("--poset", r_poset_file, "poset JSON file");
  ren->add_option("--builtin", r_builtin, "bundled poset name")->excludes(ren_poset);
  ren->add_option("--format", r_format, "dot or text")
      ->check(CLI::IsMember({"dot", "text"}));

  std::vector<const char*> cargs;
  cargs.reserve(argv.size());
  for (const auto& a : argv) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*pi) {
      finite_poset p = detail::load_poset(pi_file, "");
      return detail::cmd_poset_info(cfg, p, out);
    }
    if (*ri) return detail::cmd_ring_info(cfg, ri_spec, out);
    if (*inc) {
      finite_poset X = in_poset_file.empty() ? builtin_poset(in_builtin)
                                             : detail::load_poset(in_poset_file, "");
      return detail::cmd_incidence(cfg, in_compute, X, in_ring,
                                   in_side == "left" ? side::left : side::right, out);
    }
    if (*ren) {
      finite_poset X = r_poset_file.empty()
                           ? builtin_poset(r_builtin.empty() ? "vee" : r_builtin)
                           : detail::load_poset(r_poset_file, "");
      return detail::cmd_render(cfg, X, r_format, out);
    }
    if (*ver) {
      std::vector<suite_instance> instances;
      std::vector<std::string> rings =
          v_ring.empty() ? builtin_ring_specs() : std::vector<std::string>{v_ring};
      if (!v_poset_file.empty() || !v_builtin.empty()) {
        finite_poset X = v_poset_file.empty() ? builtin_poset(v_builtin)
                                              : detail::load_poset(v_poset_file, "");
        for (const auto& r : rings)
          instances.push_back(suite_instance{X.name(), X, r});
      } else if (!v_corpus_dir.empty()) {
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(v_corpus_dir))
          if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) fail(errc::input_error, "no poset files in '" + v_corpus_dir + "'");
        for (const auto& f : files) {
          finite_poset X = detail::load_poset(f, "");
          for (const auto& r : rings) instances.push_back(suite_instance{X.name(), X, r});
        }
      } else if (!v_ring.empty()) {
        // ring given without a poset: pair it with every bundled poset
        for (auto& X : builtin_posets())
          instances.push_back(suite_instance{X.name(), X, v_ring});
      } else {
        instances = builtin_corpus(cfg.limits);
      }
      std::vector<std::string> only;
      if (!v_theorem.empty()) {
        bool known = false;
        for (const auto& id : check_ids()) known = known || id == v_theorem;
        if (!known) fail(errc::input_error, "unknown check id '" + v_theorem + "'");
        only.push_back(v_theorem);
      }
      verification_report rep = run_suite(instances, cfg.limits, cfg.jobs, only);
      if (cfg.format == "json")
        out << report_to_json(rep, cfg.timing).dump(2) << "\n";
      else
        detail::print_report_text(cfg, rep, out);
      return detail::report_exit_code(rep);
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return is_cap_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace soclelab::cli

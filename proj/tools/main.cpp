#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "semitwist/errors.hpp"
#include "semitwist/runner.hpp"
#include "semitwist/version.hpp"

namespace {

using namespace semitwist;

// exit codes: 0 pass, 1 check failure, 2 input error, 3 cap exceeded
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

Caps parse_caps(const std::vector<std::string>& entries) {
  Caps caps;
  for (const std::string& e : entries) {
    auto pos = e.find('=');
    if (pos == std::string::npos)
      throw parse_error(0, 0, "--caps entries look like name=value, got '" + e + "'");
    std::string name = e.substr(0, pos);
    long long value = 0;
    try {
      value = std::stoll(e.substr(pos + 1));
    } catch (...) {
      throw parse_error(0, 0, "bad cap value in '" + e + "'");
    }
    if (name == "ring") caps.ring = value;
    else if (name == "group") caps.group = value;
    else if (name == "module") caps.module = value;
    else if (name == "twist") caps.twist = value;
    else if (name == "materialize") caps.materialize = value;
    else if (name == "nodes") caps.search_nodes = value;
    else throw parse_error(0, 0, "unknown cap '" + name + "'");
  }
  return caps;
}

int cmd_check(const std::string& path, const std::string& format, bool deterministic,
              const Caps& caps) {
  ParsedInstance pi = parse_instance_file(path);
  BuiltInstance bi = build_instance(pi, caps);
  Report rep = run_checks(pi, bi, caps);
  std::cout << (format == "json" ? render_json(rep, deterministic)
                                 : render_text(rep, deterministic));
  return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_aut_list(const std::vector<std::string>& tokens, const Caps& caps) {
  RingSpec spec = parse_ring_recipe_tokens(tokens);
  RingPtr ring = build_ring(spec, caps);
  AutPtr aut = enumerate_automorphisms(ring, caps);
  std::cout << "Aut(" << ring->label << ") order " << aut->autos.size() << "\n";
  for (size_t k = 0; k < aut->autos.size(); ++k) {
    std::cout << "  " << k << ":";
    for (Elem r = 0; r < ring->n; ++r)
      std::cout << " " << ring->name(r) << "->" << ring->name(aut->autos[k].map[r]);
    std::cout << "\n";
  }
  return kExitPass;
}

int cmd_twist_show(const std::string& path, const Caps& caps) {
  ParsedInstance pi = parse_instance_file(path);
  BuiltInstance bi = build_instance(pi, caps);
  TwistedGroupRing tw = twistify(bi.action, caps);
  const FiniteRing& R = *bi.ring;
  const FiniteGroup& G = *bi.group;
  std::cout << R.label << "_theta[" << G.label << "]: " << tw.size << " elements"
            << (tw.materialized() ? "" : " (not materialized)") << "\n";
  std::cout << "monomial products (r*g)*(r'*g') = r theta_g(r') * gg':\n";
  for (Elem g = 0; g < G.n; ++g)
    for (Elem r = 0; r < R.n; ++r)
      for (Elem h = 0; h < G.n; ++h)
        for (Elem s = 0; s < R.n; ++s) {
          Elem pr = R.mul(r, bi.action.apply(g, s));
          Elem pg = G.op(g, h);
          std::cout << "  (" << R.name(r) << "*" << G.name(g) << ")*(" << R.name(s) << "*"
                    << G.name(h) << ") = " << R.name(pr) << "*" << G.name(pg) << "\n";
        }
  return kExitPass;
}

int cmd_semi_show(const std::string& path, const Caps& caps) {
  ParsedInstance pi = parse_instance_file(path);
  BuiltInstance bi = build_instance(pi, caps);
  TwistedGroupRing tw = twistify(bi.action, caps);
  CosliceObject target = resolve_target(bi, tw);
  SemiGroup sg = semilinearize(target, bi.aut, caps);
  std::cout << sg.group->label << " order " << sg.pairs.size() << " over Aut(" << bi.ring->label
            << ")\n";
  for (size_t i = 0; i < sg.pairs.size(); ++i)
    std::cout << "  " << i << ": " << sg.pair_name(int(i)) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) +
               " - twisted group rings and semilinear automorphisms over finite rings"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string path, format = "text";
  bool deterministic = false;
  std::vector<std::string> cap_entries;
  std::vector<std::string> recipe_tokens;

  CLI::App* check = app.add_subcommand("check", "run the checks requested by an instance file");
  check->add_option("file", path, "instance file")->required();
  check->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--deterministic", deterministic, "omit wall times from the report");
  check->add_option("--caps", cap_entries, "override a size cap, name=value");

  CLI::App* aut = app.add_subcommand("aut", "automorphism group utilities");
  CLI::App* aut_list = aut->add_subcommand("list", "print the canonical automorphism order");
  aut_list->add_option("recipe", recipe_tokens, "ring recipe, e.g.: gf 2 1 1 1")->required();
  aut_list->add_option("--caps", cap_entries, "override a size cap, name=value");

  CLI::App* twist = app.add_subcommand("twist", "twisted group ring utilities");
  CLI::App* twist_show = twist->add_subcommand("show", "print the twisted monomial products");
  twist_show->add_option("file", path, "instance file")->required();
  twist_show->add_option("--caps", cap_entries, "override a size cap, name=value");

  CLI::App* semi = app.add_subcommand("semi", "semilinearization utilities");
  CLI::App* semi_show = semi->add_subcommand("show", "print the pairs of semi_R(S)");
  semi_show->add_option("file", path, "instance file")->required();
  semi_show->add_option("--caps", cap_entries, "override a size cap, name=value");

  CLI11_PARSE(app, argc, argv);

  try {
    Caps caps = parse_caps(cap_entries);
    if (check->parsed()) return cmd_check(path, format, deterministic, caps);
    if (aut->parsed() && aut_list->parsed()) return cmd_aut_list(recipe_tokens, caps);
    if (twist->parsed() && twist_show->parsed()) return cmd_twist_show(path, caps);
    if (semi->parsed() && semi_show->parsed()) return cmd_semi_show(path, caps);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

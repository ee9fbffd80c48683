#include "semitwist/instance.hpp"

#include <fstream>
#include <sstream>

#include "semitwist/digest.hpp"
#include "semitwist/errors.hpp"

namespace semitwist {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

struct Line {
  std::vector<Token> tokens;
  int number = 0;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    Line line;
    line.number = lineno;
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace((unsigned char)raw[i])) ++i;
      if (i >= raw.size()) break;
      size_t start = i;
      while (i < raw.size() && !std::isspace((unsigned char)raw[i])) ++i;
      line.tokens.push_back({raw.substr(start, i - start), lineno, int(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw parse_error(t.line, t.col, msg + " (got '" + t.text + "')");
}

[[noreturn]] void fail_line(const Line& l, const std::string& msg) {
  throw parse_error(l.number, 1, msg);
}

long long parse_int(const Token& t) {
  try {
    size_t pos = 0;
    long long v = std::stoll(t.text, &pos);
    if (pos != t.text.size()) fail(t, "expected an integer");
    return v;
  } catch (const parse_error&) {
    throw;
  } catch (...) {
    fail(t, "expected an integer");
  }
}

// a cursor over the tokens of one line
struct Cur {
  const Line* line;
  size_t i = 0;

  bool done() const { return i >= line->tokens.size(); }
  const Token& peek() const {
    if (done()) throw parse_error(line->number, 1, "unexpected end of line");
    return line->tokens[i];
  }
  const Token& next() {
    const Token& t = peek();
    ++i;
    return t;
  }
  long long next_int() { return parse_int(next()); }
  void expect(const std::string& word) {
    const Token& t = next();
    if (t.text != word) fail(t, "expected '" + word + "'");
  }
};

RingSpec parse_atomic_ring(Cur& c);

RingSpec parse_ring_spec(Cur& c) {
  const Token& kind = c.peek();
  if (kind.text == "product") {
    c.next();
    RingSpec spec;
    spec.kind = RingSpec::Kind::Product;
    spec.operands.push_back(parse_atomic_ring(c));
    while (!c.done()) {
      c.expect("|");
      spec.operands.push_back(parse_atomic_ring(c));
    }
    if (spec.operands.size() < 2) fail(kind, "product needs at least two operands");
    return spec;
  }
  return parse_atomic_ring(c);
}

RingSpec parse_atomic_ring(Cur& c) {
  const Token& kind = c.next();
  RingSpec spec;
  if (kind.text == "zmod") {
    spec.kind = RingSpec::Kind::Zmod;
    spec.n = c.next_int();
  } else if (kind.text == "gf") {
    spec.kind = RingSpec::Kind::Gf;
    spec.p = c.next_int();
    while (!c.done() && c.peek().text != "|") spec.coeffs.push_back(c.next_int());
    if (spec.coeffs.size() < 2) fail(kind, "gf needs a modulus of degree >= 1");
  } else if (kind.text == "matrix") {
    spec.kind = RingSpec::Kind::Matrix;
    spec.n = c.next_int();
    c.expect("zmod");
    spec.p = c.next_int();
  } else if (kind.text == "endo") {
    spec.kind = RingSpec::Kind::Endo;
    while (!c.done() && c.peek().text != "|") spec.coeffs.push_back(c.next_int());
    if (spec.coeffs.empty()) fail(kind, "endo needs invariant factors");
  } else {
    fail(kind, "unknown ring recipe");
  }
  return spec;
}

GroupSpec parse_atomic_group(Cur& c) {
  const Token& kind = c.next();
  GroupSpec spec;
  if (kind.text == "cyclic") {
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.n = c.next_int();
  } else if (kind.text == "symmetric") {
    spec.kind = GroupSpec::Kind::Symmetric;
    spec.n = c.next_int();
  } else {
    fail(kind, "unknown group recipe");
  }
  return spec;
}

GroupSpec parse_group_spec(Cur& c) {
  const Token& kind = c.peek();
  if (kind.text == "product") {
    c.next();
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Product;
    spec.operands.push_back(parse_atomic_group(c));
    while (!c.done()) {
      c.expect("|");
      spec.operands.push_back(parse_atomic_group(c));
    }
    if (spec.operands.size() < 2) fail(kind, "product needs at least two operands");
    return spec;
  }
  return parse_atomic_group(c);
}

std::vector<Elem> parse_table_line(Cur& c, size_t count, const Line& line) {
  std::vector<Elem> t;
  t.reserve(count);
  while (!c.done()) t.push_back(Elem(c.next_int()));
  if (t.size() != count)
    fail_line(line, "expected " + std::to_string(count) + " entries, got " +
                        std::to_string(t.size()));
  return t;
}

CheckKind parse_check_kind(const Token& t) {
  if (t.text == "ring_axioms") return CheckKind::RingAxioms;
  if (t.text == "semi_group") return CheckKind::SemiGroupCheck;
  if (t.text == "bijection") return CheckKind::Bijection;
  if (t.text == "naturality") return CheckKind::Naturality;
  if (t.text == "functor_laws") return CheckKind::FunctorLaws;
  if (t.text == "modules_corollary") return CheckKind::ModulesCorollary;
  if (t.text == "oracles") return CheckKind::Oracles;
  if (t.text == "all") return CheckKind::All;
  fail(t, "unknown check");
}

}  // namespace

ParsedInstance parse_instance_text(const std::string& text, const std::string& name) {
  std::vector<Line> lines = tokenize(text);
  ParsedInstance pi;
  pi.source_path = name;
  bool saw_ring = false, saw_group = false, saw_action = false;

  size_t li = 0;
  auto table_block_line = [&](const std::string& head) -> Cur {
    if (li >= lines.size())
      throw parse_error(lines.empty() ? 1 : lines.back().number, 1,
                        "expected '" + head + "' line");
    Cur c{&lines[li], 0};
    c.expect(head);
    ++li;
    return c;
  };

  while (li < lines.size()) {
    const Line& line = lines[li];
    Cur c{&line, 0};
    const Token& head = c.next();
    ++li;
    if (head.text == "ring") {
      if (saw_ring) fail(head, "duplicate ring directive");
      saw_ring = true;
      if (c.peek().text == "tables") {
        c.next();
        pi.ring.kind = RingSpec::Kind::Tables;
        pi.ring.n = c.next_int();
        size_t nn = size_t(pi.ring.n) * size_t(pi.ring.n);
        Cur cz = table_block_line("zero");
        pi.ring.zero = Elem(cz.next_int());
        Cur co = table_block_line("one");
        pi.ring.one = Elem(co.next_int());
        Cur ca = table_block_line("add");
        pi.ring.add = parse_table_line(ca, nn, *ca.line);
        Cur cm = table_block_line("mul");
        pi.ring.mul = parse_table_line(cm, nn, *cm.line);
      } else {
        pi.ring = parse_ring_spec(c);
      }
    } else if (head.text == "group") {
      if (saw_group) fail(head, "duplicate group directive");
      saw_group = true;
      if (c.peek().text == "tables") {
        c.next();
        pi.group.kind = GroupSpec::Kind::Tables;
        pi.group.n = c.next_int();
        Cur ci = table_block_line("id");
        pi.group.id = Elem(ci.next_int());
        Cur co = table_block_line("op");
        pi.group.op = parse_table_line(co, size_t(pi.group.n) * size_t(pi.group.n), *co.line);
      } else {
        pi.group = parse_group_spec(c);
      }
    } else if (head.text == "action") {
      const Token& mode = c.next();
      if (mode.text == "trivial") {
        if (saw_action) fail(mode, "action already specified");
        pi.action.kind = ActionSpec::Kind::Trivial;
      } else if (mode.text == "gen") {
        if (saw_action && pi.action.kind != ActionSpec::Kind::Gens)
          fail(mode, "mixed action directives");
        pi.action.kind = ActionSpec::Kind::Gens;
        Elem g = Elem(c.next_int());
        c.expect("->");
        c.expect("aut");
        pi.action.gens.emplace_back(g, int(c.next_int()));
      } else if (mode.text == "table") {
        if (saw_action) fail(mode, "action already specified");
        pi.action.kind = ActionSpec::Kind::Table;
        while (!c.done()) pi.action.table.push_back(int(c.next_int()));
      } else {
        fail(mode, "unknown action form");
      }
      saw_action = true;
      continue;
    } else if (head.text == "module") {
      ModuleSpec ms;
      while (!c.done() && c.peek().text != "chi") ms.factors.push_back(c.next_int());
      c.expect("chi");
      const Token& kind = c.next();
      if (kind.text == "regular") {
        ms.chi_regular = true;
      } else if (kind.text == "ids") {
        ms.chi_regular = false;
        while (!c.done()) ms.chi_ids.push_back(Elem(c.next_int()));
      } else {
        fail(kind, "chi must be 'regular' or 'ids'");
      }
      pi.module = std::move(ms);
    } else if (head.text == "target") {
      const Token& t = c.next();
      if (t.text == "self") pi.target = TargetKind::Self;
      else if (t.text == "twist") pi.target = TargetKind::Twist;
      else if (t.text == "module") pi.target = TargetKind::Module;
      else fail(t, "target must be self, twist or module");
    } else if (head.text == "check") {
      CheckSpec cs;
      cs.kind = parse_check_kind(c.next());
      if (!c.done()) {
        c.expect("expect");
        cs.expect = c.next_int();
      }
      pi.checks.push_back(cs);
    } else {
      fail(head, "unknown directive");
    }
    if (!c.done() && head.text != "check") fail(c.peek(), "trailing tokens");
  }

  if (!saw_ring) throw parse_error(1, 1, "missing ring directive");
  if (!saw_group) throw parse_error(1, 1, "missing group directive");
  if (pi.checks.empty()) pi.checks.push_back(CheckSpec{CheckKind::All, std::nullopt});
  return pi;
}

ParsedInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, 0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str(), path);
}

RingSpec parse_ring_recipe_tokens(const std::vector<std::string>& tokens) {
  Line line;
  line.number = 1;
  for (size_t i = 0; i < tokens.size(); ++i) line.tokens.push_back({tokens[i], 1, int(i) + 1});
  Cur c{&line, 0};
  if (!c.done() && c.peek().text == "tables")
    fail(c.peek(), "explicit tables are only supported in instance files");
  RingSpec spec = parse_ring_spec(c);
  if (!c.done()) fail(c.peek(), "trailing tokens");
  return spec;
}

RingPtr build_ring(const RingSpec& spec, const Caps& caps) {
  switch (spec.kind) {
    case RingSpec::Kind::Zmod:
      return ring_zmod(spec.n, caps);
    case RingSpec::Kind::Gf:
      return ring_gf(spec.p, spec.coeffs, caps);
    case RingSpec::Kind::Matrix:
      return ring_matrix(int(spec.n), spec.p, caps);
    case RingSpec::Kind::Endo:
      return endomorphism_ring(make_abelian_group(spec.coeffs, caps), caps).ring;
    case RingSpec::Kind::Product: {
      std::vector<RingPtr> ops;
      for (const auto& o : spec.operands) ops.push_back(build_ring(o, caps));
      return ring_product(ops, caps);
    }
    case RingSpec::Kind::Tables:
      if (spec.n > caps.ring) throw cap_exceeded("ring", caps.ring, spec.n);
      return check_ring_tables("ring" + std::to_string(spec.n), int(spec.n), spec.zero, spec.one,
                               spec.add, spec.mul);
  }
  throw std::logic_error("unhandled ring recipe");
}

GroupPtr build_group(const GroupSpec& spec, const Caps& caps) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return group_cyclic(spec.n, caps);
    case GroupSpec::Kind::Symmetric:
      return group_symmetric(int(spec.n), caps);
    case GroupSpec::Kind::Product: {
      std::vector<GroupPtr> ops;
      for (const auto& o : spec.operands) ops.push_back(build_group(o, caps));
      return group_product(ops, caps);
    }
    case GroupSpec::Kind::Tables:
      if (spec.n > caps.group) throw cap_exceeded("group", caps.group, spec.n);
      return check_group_tables("group" + std::to_string(spec.n), int(spec.n), spec.id, spec.op);
  }
  throw std::logic_error("unhandled group recipe");
}

BuiltInstance build_instance(const ParsedInstance& pi, const Caps& caps) {
  BuiltInstance bi;
  bi.ring = build_ring(pi.ring, caps);
  bi.group = build_group(pi.group, caps);
  bi.aut = enumerate_automorphisms(bi.ring, caps);
  switch (pi.action.kind) {
    case ActionSpec::Kind::Trivial:
      bi.action = trivial_action(bi.group, bi.ring, bi.aut);
      break;
    case ActionSpec::Kind::Gens:
      bi.action = make_action(bi.group, bi.ring, bi.aut, pi.action.gens);
      break;
    case ActionSpec::Kind::Table:
      bi.action = make_action_table(bi.group, bi.ring, bi.aut, pi.action.table);
      break;
  }
  if (pi.module) {
    if (pi.module->chi_regular)
      bi.module = regular_module_structure(bi.ring, pi.module->factors, caps);
    else
      bi.module = module_structure_from_chi(
          bi.ring, make_abelian_group(pi.module->factors, caps), pi.module->chi_ids, caps);
  }
  bi.target = pi.target;
  if (bi.target == TargetKind::Module && !bi.module)
    throw validation_error(Violation::BadRecipe, "", "target module without a module directive");

  Digest d;
  d.feed(bi.ring->label).feed(bi.ring->n).feed(bi.ring->zero).feed(bi.ring->one);
  d.feed_range(bi.ring->add_table).feed_range(bi.ring->mul_table);
  d.feed(bi.group->label).feed(bi.group->n).feed(bi.group->id);
  d.feed_range(bi.group->op_table);
  d.feed_range(bi.action.theta.map);
  if (bi.module) {
    d.feed_range(bi.module->module.factors);
    d.feed_range(bi.module->chi.map);
  }
  d.feed(int(bi.target));
  bi.digest = d.hex();
  return bi;
}

CosliceObject resolve_target(const BuiltInstance& bi, const TwistedGroupRing& tw) {
  TargetKind k = bi.target;
  if (k == TargetKind::Auto) k = bi.module ? TargetKind::Module : TargetKind::Twist;
  switch (k) {
    case TargetKind::Self:
      return identity_coslice_object(bi.ring);
    case TargetKind::Module:
      return CosliceObject{bi.ring, bi.module->endos.ring, bi.module->chi};
    case TargetKind::Twist:
    default:
      return twisted_coslice(tw);
  }
}

}  // namespace semitwist

#include "fsplit/session.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "fsplit/parse.hpp"
#include "json.hpp"

namespace fsplit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

std::string ideal_str(const IdealHandle& I) {
  const auto& gb = I.groebner_basis();
  if (gb.empty()) return "ideal(0)";
  std::string s = "ideal(";
  for (size_t i = 0; i < gb.size(); ++i) {
    if (i) s += ", ";
    s += gb[i].to_string();
  }
  return s + ")";
}

struct Session {
  RingPtr ring;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, IdealHandle> ideals;
  std::map<std::string, UniPoly> upolys;

  // Positional words and key=value arguments of one command line.
  struct Args {
    std::vector<std::string> pos;
    std::map<std::string, std::string> kv;

    long long num(const std::string& key) const {
      auto it = kv.find(key);
      if (it == kv.end()) throw SessionError("missing argument " + key + "=");
      return std::stoll(it->second);
    }
    long long num_or(const std::string& key, long long dflt) const {
      auto it = kv.find(key);
      return it == kv.end() ? dflt : std::stoll(it->second);
    }
    std::string str(const std::string& key) const {
      auto it = kv.find(key);
      if (it == kv.end()) throw SessionError("missing argument " + key + "=");
      return it->second;
    }
  };

  void need_ring() const {
    if (!ring) throw SessionError("no ring declared yet");
  }

  Polynomial poly_arg(const std::string& name) const {
    need_ring();
    auto it = polys.find(name);
    if (it != polys.end()) return it->second;
    return parse_polynomial(name, ring);  // allow inline expressions
  }

  IdealHandle ideal_arg(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw SessionError("unknown ideal '" + name + "'");
    return it->second;
  }

  UniPoly upoly_arg(const std::string& name) const {
    auto it = upolys.find(name);
    if (it == upolys.end()) throw SessionError("unknown univariate polynomial '" + name + "'");
    return it->second;
  }

  std::vector<std::pair<Polynomial, int>> pattern_arg(const std::string& spec) const {
    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& item : split(spec, ',')) {
      auto parts = split(item, ':');
      if (parts.size() != 2) throw SessionError("pattern items are <gen>:<weight>");
      out.emplace_back(poly_arg(trim(parts[0])), (int)std::stoll(parts[1]));
    }
    return out;
  }

  QuotientPresentation presentation(const IdealHandle& I, const Args& a) const {
    auto it = a.kv.find("m");
    if (it != a.kv.end()) return {ring, I, ideal_arg(it->second)};
    return {ring, I};
  }

  void declare(const std::string& line);
  void execute(const std::string& verb, const Args& a, CommandRecord& rec);
};

void Session::declare(const std::string& line) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  if (word == "ring") {
    std::string rest;
    std::getline(is, rest);
    long long p = 0;
    std::vector<std::string> vars;
    MonomialOrder ord = MonomialOrder::grevlex();
    std::istringstream rs(rest);
    std::string tok;
    while (rs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw SessionError("ring: expected key=value, got " + tok);
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "p") {
        p = std::stoll(val);
      } else if (key == "vars") {
        for (auto& v : split(val, ',')) vars.push_back(trim(v));
      } else if (key == "order") {
        if (val == "lex") ord = MonomialOrder::lex();
        else if (val == "grevlex") ord = MonomialOrder::grevlex();
        else throw SessionError("ring: unknown order " + val);
      } else {
        throw SessionError("ring: unknown key " + key);
      }
    }
    if (p == 0 || vars.empty()) throw SessionError("ring needs p= and vars=");
    ring = make_ring(p, vars, ord);
    polys.clear();
    ideals.clear();
    upolys.clear();
    return;
  }
  need_ring();
  std::string name, eq;
  is >> name >> eq;
  if (eq != "=") throw SessionError(word + ": expected '='");
  if (polys.count(name) || ideals.count(name) || upolys.count(name))
    throw SessionError("name '" + name + "' already declared");
  std::string rest;
  std::getline(is, rest);
  rest = trim(rest);
  if (word == "let") {
    polys.emplace(name, parse_polynomial(rest, ring));
  } else if (word == "ideal") {
    std::vector<Polynomial> gens;
    for (const auto& g : split(rest, ','))
      gens.push_back(parse_polynomial(trim(g), ring));
    ideals.emplace(name, IdealHandle(ring, std::move(gens)));
  } else if (word == "upoly") {
    if (ring->var_index("T") >= 0)
      throw SessionError("upoly: ring already has a variable named T");
    auto vars = ring->variables;
    vars.push_back("T");
    RingPtr ext = make_ring(ring->characteristic, vars, ring->default_order);
    Polynomial f = parse_polynomial(rest, ext);
    int deg = 0;
    for (const auto& t : f.terms()) deg = std::max(deg, t.mono.exps.back());
    std::vector<std::vector<std::pair<Monomial, long long>>> buckets(deg + 1);
    for (const auto& t : f.terms()) {
      Monomial m(ring->nvars());
      std::copy_n(t.mono.exps.begin(), ring->nvars(), m.exps.begin());
      buckets[t.mono.exps.back()].emplace_back(std::move(m), t.coeff);
    }
    std::vector<Polynomial> coeffs;
    for (auto& b : buckets) coeffs.push_back(Polynomial::from_terms(ring, std::move(b)));
    upolys.emplace(name, UniPoly(ring, std::move(coeffs)));
  } else {
    throw SessionError("unknown declaration '" + word + "'");
  }
}

void Session::execute(const std::string& verb, const Args& a, CommandRecord& rec) {
  std::ostringstream out;
  if (verb == "fedder") {
    auto P = presentation(ideal_arg(a.pos.at(0)), a);
    auto res = fedder_fpure(P, a.num("q"));
    out << "fpure=" << (res.fpure ? "true" : "false");
    if (res.witness.has_value()) rec.witness = res.witness->to_string();
  } else if (verb == "bracket") {
    out << ideal_str(bracket_power(ideal_arg(a.pos.at(0)), a.num("q")));
  } else if (verb == "frobroot") {
    out << ideal_str(frobenius_root(ideal_arg(a.pos.at(0)), a.num("q")));
  } else if (verb == "colon") {
    IdealHandle I = ideal_arg(a.pos.at(0));
    if (ideals.count(a.pos.at(1)))
      out << ideal_str(ideal_colon_ideal(I, ideal_arg(a.pos.at(1))));
    else
      out << ideal_str(ideal_colon(I, poly_arg(a.pos.at(1))));
  } else if (verb == "intersect") {
    out << ideal_str(ideal_intersect(ideal_arg(a.pos.at(0)), ideal_arg(a.pos.at(1))));
  } else if (verb == "nf") {
    out << normal_form(poly_arg(a.pos.at(0)), ideal_arg(a.pos.at(1))).to_string();
  } else if (verb == "splitprime") {
    auto P = presentation(ideal_arg(a.pos.at(0)), a);
    long long q = a.num("q");
    MultiplierSet U = enumerate_divisor_multipliers(P, pattern_arg(a.str("pattern")), q);
    if (U.premultipliers.empty()) throw SessionError("EMPTY_SET: no multipliers");
    auto res = splitting_prime(P, U.premultipliers, q, (int)a.num_or("cap", 30));
    rec.iterations = res.iterations;
    switch (res.status) {
      case SplittingPrimeResult::Status::Converged:
        out << ideal_str(res.ideal);
        break;
      case SplittingPrimeResult::Status::Degenerate:
        throw SessionError("DEGENERATE: iteration stabilized at the unit ideal");
      case SplittingPrimeResult::Status::Nonconverged:
        throw SessionError("NONCONVERGED: iteration cap exceeded");
    }
  } else if (verb == "restrict") {
    auto res = restrict_to_center(poly_arg(a.pos.at(0)), ideal_arg(a.pos.at(1)), a.num("q"));
    switch (res.status) {
      case CenterRestriction::Status::Ok:
        out << "unit=" << res.unit.value << " extracted=" << res.extracted.to_string();
        break;
      case CenterRestriction::Status::ZeroRestriction:
        out << "ZERO_RESTRICTION";
        break;
      case CenterRestriction::Status::FrameError:
        throw SessionError("FRAME_ERROR: residue not divisible by the frame power");
    }
  } else if (verb == "freerank") {
    auto P = presentation(ideal_arg(a.pos.at(0)), a);
    long long q = a.num("q");
    MultiplierSet U = enumerate_divisor_multipliers(P, pattern_arg(a.str("pattern")), q);
    if (U.premultipliers.empty()) throw SessionError("EMPTY_SET: no multipliers");
    auto rep = free_rank(degeneracy_ideal(P, U.premultipliers, q), q, U.degree.e,
                         (int)a.num("d"));
    out << "a_e=" << rep.a_e << " q=" << rep.q << " ratio=" << rational_str(rep.ratio);
  } else if (verb == "ratioseq") {
    auto P = presentation(ideal_arg(a.pos.at(0)), a);
    auto range = split(a.str("e"), '.');
    if (range.size() != 3 || !range[1].empty())
      throw SessionError("ratioseq: e=<lo>..<hi>");
    auto reps = ratio_sequence(P, pattern_arg(a.str("pattern")), (int)std::stoll(range[0]),
                               (int)std::stoll(range[2]), (int)a.num("d"));
    for (size_t i = 0; i < reps.size(); ++i) {
      if (i) out << "; ";
      out << "e=" << reps[i].e << " a_e=" << reps[i].a_e
          << " ratio=" << rational_str(reps[i].ratio);
    }
  } else if (verb == "volume") {
    out << rational_str(cube_halfspace_volume((int)std::stoll(a.pos.at(0)),
                                              (int)std::stoll(a.pos.at(1))));
  } else if (verb == "disc") {
    auto d = discriminant(upoly_arg(a.pos.at(0)));
    if (!d.has_value()) throw SessionError("INSEPARABLE");
    out << d->to_string();
  } else if (verb == "resultant") {
    out << resultant(upoly_arg(a.pos.at(0)), upoly_arg(a.pos.at(1))).to_string();
  } else if (verb == "kummer") {
    need_ring();
    KummerCover K{(int)a.num("n"), poly_arg(a.str("f")),
                  a.num_or("p", ring->characteristic), (int)a.num("m")};
    auto rep = kummer_analyze(K);
    out << "tame=" << (rep.tame ? "true" : "false") << " e=" << rep.e
        << " branch=" << rep.branch.to_string();
  } else if (verb == "nefcheck") {
    RamificationData d{std::stoll(a.pos.at(0)), std::stoll(a.pos.at(1)),
                       std::stoll(a.pos.at(2)), std::stoll(a.pos.at(3))};
    out << (nef_check(d) ? "true" : "false");
  } else if (verb == "verifyfact") {
    std::vector<std::pair<Polynomial, int>> factors;
    for (const auto& item : split(a.str("factors"), ',')) {
      auto parts = split(item, ':');
      if (parts.size() != 2) throw SessionError("factors items are <poly>:<mult>");
      factors.emplace_back(poly_arg(trim(parts[0])), (int)std::stoll(parts[1]));
    }
    bool ok = verify_factorization(poly_arg(a.pos.at(0)), factors, ideal_arg(a.pos.at(1)));
    out << (ok ? "true" : "false");
  } else {
    throw SessionError("unknown command '" + verb + "'");
  }
  rec.result = out.str();
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << r.status << "  " << r.cmd << "\n";
    if (!r.result.empty()) os << "      " << r.result << "\n";
    if (!r.witness.empty()) os << "      witness: " << r.witness << "\n";
    if (r.iterations >= 0) os << "      iterations: " << r.iterations << "\n";
    os << "      (" << r.elapsed_ms << " ms)\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["records"] = nlohmann::ordered_json::array();
  nlohmann::ordered_json timings = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["cmd"] = r.cmd;
    rec["status"] = r.status;
    rec["result"] = r.result;
    if (!r.witness.empty()) rec["witness"] = r.witness;
    if (r.iterations >= 0) rec["iterations"] = r.iterations;
    j["records"].push_back(rec);
    timings.push_back(r.elapsed_ms);
  }
  j["timings_ms"] = timings;
  return j.dump(2) + "\n";
}

Report run_session_text(const std::string& text, bool strict) {
  Session s;
  Report report;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string verb;
    ls >> verb;
    if (verb == "ring" || verb == "let" || verb == "ideal" || verb == "upoly") {
      try {
        s.declare(line);
      } catch (const std::exception& e) {
        throw SessionError("declaration failed: " + line + ": " + e.what());
      }
      continue;
    }
    CommandRecord rec;
    rec.cmd = line;
    Session::Args args;
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq != std::string::npos && eq > 0 && std::isalpha((unsigned char)tok[0]))
        args.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
      else
        args.pos.push_back(tok);
    }
    auto start = std::chrono::steady_clock::now();
    try {
      s.execute(verb, args, rec);
      rec.status = "ok";
    } catch (const std::exception& e) {
      rec.status = "error";
      rec.result = e.what();
      report.had_error = true;
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    report.records.push_back(rec);
    if (strict && report.had_error) break;
  }
  return report;
}

Report run_session(const std::string& path, bool strict) {
  std::ifstream f(path);
  if (!f) throw SessionError("cannot open session file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return run_session_text(ss.str(), strict);
}

}  // namespace fsplit

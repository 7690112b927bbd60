#include "ptri/report_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ptri {

namespace {

using ordered_json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit int64, otherwise as
// decimal strings, so arbitrarily large values survive the format.
ordered_json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", json_int(num(r))}, {"den", json_int(den(r))}};
}

ordered_json surd_json(const Surd& v, unsigned digits) {
  return ordered_json{{"num", json_int(num(v.coeff()))},
                      {"den", json_int(den(v.coeff()))},
                      {"radicand", json_int(v.radicand())},
                      {"decimal", v.decimal(digits)},
                      {"class", to_string(classify(v))}};
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Left-justified plain-text columns.
std::string format_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string surd_csv_fields(const Surd& v, unsigned digits) {
  return num(v.coeff()).str() + "," + den(v.coeff()).str() + "," + v.radicand().str() + "," +
         v.decimal(digits) + "," + to_string(classify(v));
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::domain_error("unknown output format: " + name);
}

std::string equation_token(QuarticId eq) { return eq == QuarticId::A ? "A" : "B"; }

std::string regime_token(Regime regime) {
  switch (regime) {
    case Regime::MixedParityCoprime: return "mixed";
    case Regime::BothOddCoprime: return "both-odd";
    case Regime::Unconstrained: return "unconstrained";
  }
  throw std::logic_error("unreachable regime");
}

QuarticId parse_equation(const std::string& token) {
  if (token == "A") return QuarticId::A;
  if (token == "B") return QuarticId::B;
  throw std::domain_error("unknown equation: " + token + " (expected A or B)");
}

Regime parse_regime(const std::string& token) {
  if (token == "mixed") return Regime::MixedParityCoprime;
  if (token == "both-odd") return Regime::BothOddCoprime;
  if (token == "unconstrained") return Regime::Unconstrained;
  throw std::domain_error("unknown regime: " + token +
                          " (expected mixed, both-odd or unconstrained)");
}

std::string render_elements(const ElementReport& r, OutputFormat format, unsigned digits) {
  switch (format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["params"] = ordered_json{{"delta", json_int(r.params.delta)},
                                 {"m", json_int(r.params.m)},
                                 {"n", json_int(r.params.n)}};
      j["triple"] = ordered_json{{"alpha", json_int(r.triple.alpha)},
                                 {"beta", json_int(r.triple.beta)},
                                 {"gamma", json_int(r.triple.gamma)}};
      j["s"] = rational_json(r.s);
      j["area"] = rational_json(r.area);
      for (std::size_t i = 0; i < kElementCount; ++i) {
        j[std::string(kElementNames[i])] = surd_json(r.values[i], digits);
      }
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "element,num,den,radicand,decimal,class\n";
      out += "s," + num(r.s).str() + "," + den(r.s).str() + ",1," + rational_decimal(r.s, digits) +
             "," + to_string(classify(Surd::from_rational(r.s))) + "\n";
      out += "area," + num(r.area).str() + "," + den(r.area).str() + ",1," +
             rational_decimal(r.area, digits) + "," +
             to_string(classify(Surd::from_rational(r.area))) + "\n";
      for (std::size_t i = 0; i < kElementCount; ++i) {
        out += std::string(kElementNames[i]) + "," + surd_csv_fields(r.values[i], digits) + "\n";
      }
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "triangle (alpha, beta, gamma) = (" + r.triple.alpha.str() + ", " +
                        r.triple.beta.str() + ", " + r.triple.gamma.str() + ")  from (delta, m, n) = (" +
                        r.params.delta.str() + ", " + r.params.m.str() + ", " + r.params.n.str() +
                        ")\n";
      out += "s = " + to_string(r.s) + ", area = " + to_string(r.area) + "\n\n";
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"element", "exact", "decimal", "class"});
      for (std::size_t i = 0; i < kElementCount; ++i) {
        rows.push_back({std::string(kElementNames[i]), to_string(r.values[i]),
                        r.values[i].decimal(digits), to_string(classify(r.values[i]))});
      }
      return out + format_rows(rows);
    }
  }
  throw std::logic_error("unreachable format");
}

std::string render_family(int family, const FamilyEnumeration& enumeration, const Int& delta,
                          OutputFormat format, unsigned digits) {
  auto bisector = [&](const FamilyMember& fm) {
    return fm.family <= 3 ? delta_beta_value(fm, delta) : d_beta_value(fm, delta);
  };
  const char* kind = family <= 3 ? "delta_beta" : "d_beta";
  switch (format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["family"] = family;
      j["delta"] = json_int(delta);
      j["bisector"] = kind;
      ordered_json members = ordered_json::array();
      for (const FamilyMember& fm : enumeration.members) {
        Rational v = bisector(fm);
        ordered_json e{{"k", json_int(fm.k)}, {"l", json_int(fm.l)},   {"m", json_int(fm.m)},
                       {"n", json_int(fm.n)}, {"root", json_int(fm.root)}};
        e["t"] = fm.t ? json_int(*fm.t) : ordered_json(nullptr);
        e["value"] = rational_json(v);
        e["decimal"] = rational_decimal(v, digits);
        e["class"] = to_string(classify(Surd::from_rational(v)));
        members.push_back(std::move(e));
      }
      j["members"] = std::move(members);
      ordered_json rejections = ordered_json::array();
      for (const FamilyRejection& rej : enumeration.rejections) {
        rejections.push_back(ordered_json{
            {"k", json_int(rej.k)}, {"l", json_int(rej.l)}, {"reasons", rej.reasons}});
      }
      j["rejections"] = std::move(rejections);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "status,k,l,m,n,root,t,value_num,value_den,decimal,reasons\n";
      for (const FamilyMember& fm : enumeration.members) {
        Rational v = bisector(fm);
        out += "member," + fm.k.str() + "," + fm.l.str() + "," + fm.m.str() + "," + fm.n.str() +
               "," + fm.root.str() + "," + (fm.t ? fm.t->str() : "") + "," + num(v).str() + "," +
               den(v).str() + "," + rational_decimal(v, digits) + ",\n";
      }
      for (const FamilyRejection& rej : enumeration.rejections) {
        out += "rejected," + rej.k.str() + "," + rej.l.str() + ",,,,,,,," +
               csv_quote(join(rej.reasons, "; ")) + "\n";
      }
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "family " + std::to_string(family) + ", " + kind + " at delta = " +
                        delta.str() + "\n\n";
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"k", "l", "m", "n", family <= 3 ? "z" : "w", "t", kind, "decimal", "class"});
      for (const FamilyMember& fm : enumeration.members) {
        Rational v = bisector(fm);
        rows.push_back({fm.k.str(), fm.l.str(), fm.m.str(), fm.n.str(), fm.root.str(),
                        fm.t ? fm.t->str() : "-", to_string(v), rational_decimal(v, digits),
                        to_string(classify(Surd::from_rational(v)))});
      }
      if (enumeration.members.empty()) {
        out += "no members within the generator bound\n";
      } else {
        out += format_rows(rows);
      }
      out += "\nrejected generator pairs:\n";
      if (enumeration.rejections.empty()) {
        out += "  none\n";
      } else {
        for (const FamilyRejection& rej : enumeration.rejections) {
          out += "  (" + rej.k.str() + ", " + rej.l.str() + "): " + join(rej.reasons, "; ") + "\n";
        }
      }
      return out;
    }
  }
  throw std::logic_error("unreachable format");
}

std::string render_search(QuarticId eq, Regime regime, const Int& bound,
                          const std::vector<QuarticSolution>& solutions, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["equation"] = equation_token(eq);
      j["form"] = to_string(eq);
      j["regime"] = regime_token(regime);
      j["conditions"] = to_string(regime);
      j["bound"] = json_int(bound);
      j["count"] = solutions.size();
      ordered_json list = ordered_json::array();
      for (const QuarticSolution& s : solutions) {
        list.push_back(ordered_json{
            {"x", json_int(s.x)}, {"y", json_int(s.y)}, {"z", json_int(s.z)}});
      }
      j["solutions"] = std::move(list);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "x,y,z\n";
      for (const QuarticSolution& s : solutions) {
        out += s.x.str() + "," + s.y.str() + "," + s.z.str() + "\n";
      }
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "equation " + equation_token(eq) + ": " + to_string(eq) + "\nregime: " +
                        to_string(regime) + ", box 1 <= x, y <= " + bound.str() + "\n\n";
      if (solutions.empty()) return out + "no solutions\n";
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"x", "y", "z"});
      for (const QuarticSolution& s : solutions) {
        rows.push_back({s.x.str(), s.y.str(), s.z.str()});
      }
      return out + format_rows(rows) + "\n" + std::to_string(solutions.size()) + " solution(s)\n";
    }
  }
  throw std::logic_error("unreachable format");
}

std::string render_claims(const std::vector<ClaimOutcome>& claims, const Int& survey_m,
                          bool expected_match, const std::vector<std::string>& diagnostics,
                          OutputFormat format) {
  std::size_t confirmed = 0, refuted = 0, errata = 0;
  for (const ClaimOutcome& c : claims) {
    switch (c.status) {
      case ClaimStatus::Confirmed: ++confirmed; break;
      case ClaimStatus::Refuted: ++refuted; break;
      case ClaimStatus::ConfirmedWithErratum: ++errata; break;
    }
  }
  switch (format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["survey_m"] = json_int(survey_m);
      ordered_json list = ordered_json::array();
      for (const ClaimOutcome& c : claims) {
        ordered_json e;
        e["claim"] = c.claim_id;
        e["status"] = to_string(c.status);
        e["claimed"] = c.claimed_value ? ordered_json(*c.claimed_value) : ordered_json(nullptr);
        e["normative"] =
            c.normative_value ? ordered_json(*c.normative_value) : ordered_json(nullptr);
        e["note"] = c.note;
        list.push_back(std::move(e));
      }
      j["claims"] = std::move(list);
      j["counts"] = ordered_json{
          {"confirmed", confirmed}, {"refuted", refuted}, {"confirmed-with-erratum", errata}};
      j["expected_match"] = expected_match;
      j["diagnostics"] = diagnostics;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "claim,status,claimed,normative,note\n";
      for (const ClaimOutcome& c : claims) {
        out += csv_quote(c.claim_id) + "," + to_string(c.status) + "," +
               csv_quote(c.claimed_value.value_or("")) + "," +
               csv_quote(c.normative_value.value_or("")) + "," + csv_quote(c.note) + "\n";
      }
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "claim survey, m <= " + survey_m.str() + "\n\n";
      for (const ClaimOutcome& c : claims) {
        out += to_string(c.status) + "  " + c.claim_id + "\n";
        if (c.claimed_value) out += "    claimed:   " + *c.claimed_value + "\n";
        if (c.normative_value) out += "    computed:  " + *c.normative_value + "\n";
        if (!c.note.empty()) out += "    note:      " + c.note + "\n";
      }
      out += "\n" + std::to_string(confirmed) + " confirmed, " + std::to_string(refuted) +
             " refuted, " + std::to_string(errata) + " confirmed with errata\n";
      out += expected_match ? "all outcomes match the documented expectation\n"
                            : "OUTCOMES DIVERGE FROM THE DOCUMENTED EXPECTATION\n";
      for (const std::string& d : diagnostics) out += "  " + d + "\n";
      return out;
    }
  }
  throw std::logic_error("unreachable format");
}

}  // namespace ptri

#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fracton/errors.hpp"
#include "fracton/farey.hpp"
#include "fracton/rational.hpp"
#include "fracton/spectrum.hpp"

namespace fracton {

/// Explains one printed value that deviates from the arithmetic it should
/// satisfy. Annotated deviations count as documented, not as failures.
struct ChainAnnotation {
  int index = -1;  // adjacent-pair index into the chain
  std::string printed;
  std::string expected;
  std::string note;
};

struct ChainFixture {
  std::string name;
  std::vector<Ratio> entries;
  bool expect_valid = true;
  std::vector<ChainAnnotation> annotations;
};

struct PairSetFixture {
  std::string name;
  std::vector<std::pair<Ratio, Ratio>> pairs;  // (nu, expected dual)
};

struct GroupClassFixture {
  Ratio h;
  std::vector<Ratio> printed_members;
};

struct MemberAnnotation {
  int class_index = -1;
  int member_index = -1;
  std::string printed;
  std::string expected;
  std::string note;
};

struct GroupFixture {
  std::string name;
  std::vector<GroupClassFixture> classes;
  std::vector<MemberAnnotation> annotations;
};

struct FixtureSet {
  int version = 0;
  std::string name;
  std::vector<ChainFixture> chains;
  std::vector<PairSetFixture> dual_pairs;
  std::vector<GroupFixture> groups;
};

namespace detail {

inline nlohmann::json parse_json(std::istream& in, const std::string& where) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw domain_error("fixture parse (" + where + "): " + e.what());
  }
  return doc;
}

inline Ratio ratio_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string())
    throw domain_error("fixture parse (" + where +
                       "): rationals must be strings like \"p/q\"");
  return Ratio::parse(j.get<std::string>());
}

template <class T>
T require(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key))
    throw domain_error("fixture parse (" + where + "): missing field '" +
                       std::string(key) + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw domain_error("fixture parse (" + where + "): field '" +
                       std::string(key) + "': " + e.what());
  }
}

inline ChainFixture chain_from_json(const nlohmann::json& j,
                                    const std::string& where) {
  ChainFixture chain;
  chain.name = require<std::string>(j, "name", where);
  const std::string at = where + "/" + chain.name;
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw domain_error("fixture parse (" + at + "): missing 'entries' array");
  for (const auto& e : j.at("entries"))
    chain.entries.push_back(ratio_field(e, at));
  chain.expect_valid = require<bool>(j, "expect_valid", at);
  if (j.contains("annotations")) {
    for (const auto& a : j.at("annotations")) {
      ChainAnnotation note;
      note.index = require<int>(a, "index", at);
      note.printed = require<std::string>(a, "printed", at);
      note.expected = require<std::string>(a, "expected", at);
      note.note = require<std::string>(a, "note", at);
      chain.annotations.push_back(std::move(note));
    }
  }
  return chain;
}

}  // namespace detail

/// Parses one standalone chain document {name, entries, expect_valid}.
inline ChainFixture parse_chain_fixture(std::istream& in,
                                        const std::string& where = "chain") {
  return detail::chain_from_json(detail::parse_json(in, where), where);
}

inline ChainFixture load_chain_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open fixture file '" + path + "'");
  return parse_chain_fixture(in, path);
}

/// Parses an aggregate fixture document with chains, dual-pair sets and
/// class-sequence groups. Fixture names must be unique within the set.
inline FixtureSet parse_fixture_set(std::istream& in,
                                    const std::string& where = "fixtures") {
  const nlohmann::json doc = detail::parse_json(in, where);
  FixtureSet set;
  set.version = detail::require<int>(doc, "version", where);
  set.name = detail::require<std::string>(doc, "name", where);
  std::set<std::string> names;
  const auto claim_name = [&](const std::string& name) {
    if (!names.insert(name).second)
      throw domain_error("fixture parse (" + where + "): duplicate fixture name '" +
                         name + "'");
  };
  if (doc.contains("chains")) {
    for (const auto& c : doc.at("chains")) {
      set.chains.push_back(detail::chain_from_json(c, where));
      claim_name(set.chains.back().name);
    }
  }
  if (doc.contains("dual_pairs")) {
    for (const auto& p : doc.at("dual_pairs")) {
      PairSetFixture pairs;
      pairs.name = detail::require<std::string>(p, "name", where);
      claim_name(pairs.name);
      const std::string at = where + "/" + pairs.name;
      if (!p.contains("pairs") || !p.at("pairs").is_array())
        throw domain_error("fixture parse (" + at + "): missing 'pairs' array");
      for (const auto& pair : p.at("pairs")) {
        if (!pair.is_array() || pair.size() != 2)
          throw domain_error("fixture parse (" + at +
                             "): each pair must be a 2-element array");
        pairs.pairs.emplace_back(detail::ratio_field(pair.at(0), at),
                                 detail::ratio_field(pair.at(1), at));
      }
      set.dual_pairs.push_back(std::move(pairs));
    }
  }
  if (doc.contains("groups")) {
    for (const auto& g : doc.at("groups")) {
      GroupFixture group;
      group.name = detail::require<std::string>(g, "name", where);
      claim_name(group.name);
      const std::string at = where + "/" + group.name;
      if (!g.contains("classes") || !g.at("classes").is_array())
        throw domain_error("fixture parse (" + at + "): missing 'classes' array");
      for (const auto& c : g.at("classes")) {
        GroupClassFixture cls;
        cls.h = detail::ratio_field(c.at("h"), at);
        if (!c.contains("printed_members") || !c.at("printed_members").is_array())
          throw domain_error("fixture parse (" + at +
                             "): class missing 'printed_members'");
        for (const auto& m : c.at("printed_members"))
          cls.printed_members.push_back(detail::ratio_field(m, at));
        group.classes.push_back(std::move(cls));
      }
      if (g.contains("annotations")) {
        for (const auto& a : g.at("annotations")) {
          MemberAnnotation note;
          note.class_index = detail::require<int>(a, "class_index", at);
          note.member_index = detail::require<int>(a, "member_index", at);
          note.printed = detail::require<std::string>(a, "printed", at);
          note.expected = detail::require<std::string>(a, "expected", at);
          note.note = detail::require<std::string>(a, "note", at);
          group.annotations.push_back(std::move(note));
        }
      }
      set.groups.push_back(std::move(group));
    }
  }
  return set;
}

inline FixtureSet load_fixture_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open fixture file '" + path + "'");
  return parse_fixture_set(in, path);
}

/// Outcome of validating one fixture. `failures` counts verdicts that
/// failed without an annotation; annotated deviations are tallied apart.
struct FixtureOutcome {
  std::string name;
  std::string kind;  // "chain", "dual-pairs" or "group"
  int checks = 0;
  int failures = 0;
  int annotated = 0;
  bool expect_valid = true;
  bool pass = false;
  std::vector<std::string> details;
};

struct FixtureReport {
  std::vector<FixtureOutcome> outcomes;
  int total_checks = 0;
  int total_failures = 0;
  int total_annotated = 0;
  bool ok = true;
};

namespace detail {

inline void finish_outcome(FixtureOutcome& outcome) {
  outcome.pass = outcome.expect_valid ? outcome.failures == 0
                                      : outcome.failures > 0;
}

}  // namespace detail

inline FixtureOutcome validate_chain_fixture(const ChainFixture& fixture) {
  FixtureOutcome outcome;
  outcome.name = fixture.name;
  outcome.kind = "chain";
  outcome.expect_valid = fixture.expect_valid;
  const TransitionChain chain = validate_chain(fixture.entries);
  outcome.checks = static_cast<int>(chain.verdicts.size());
  for (std::size_t i = 0; i < chain.verdicts.size(); ++i) {
    if (chain.verdicts[i]) continue;
    const std::string what =
        "pair " + std::to_string(i) + ": " + chain.entries[i].str() + " -> " +
        chain.entries[i + 1].str() + " has determinant " +
        unimodular_det(chain.entries[i], chain.entries[i + 1]).str();
    bool annotated = false;
    for (const ChainAnnotation& note : fixture.annotations)
      annotated = annotated || note.index == static_cast<int>(i);
    if (annotated) {
      ++outcome.annotated;
      outcome.details.push_back("annotated: " + what);
    } else {
      ++outcome.failures;
      outcome.details.push_back("failed: " + what);
    }
  }
  detail::finish_outcome(outcome);
  return outcome;
}

inline FixtureOutcome validate_pair_set(const PairSetFixture& fixture) {
  FixtureOutcome outcome;
  outcome.name = fixture.name;
  outcome.kind = "dual-pairs";
  for (const auto& [nu, expected] : fixture.pairs) {
    ++outcome.checks;
    const DualPair dual = dual_filling(nu);
    const bool ok =
        dual.nu_dual == expected && dual.h + dual.h_dual == Ratio(3);
    if (!ok) {
      ++outcome.failures;
      outcome.details.push_back("failed: dual of " + nu.str() + " is " +
                                dual.nu_dual.str() + ", fixture lists " +
                                expected.str());
    }
  }
  detail::finish_outcome(outcome);
  return outcome;
}

/// Group checks: the h sequence and the derived first-member sequence 2-h
/// must both be unimodular chains, and every printed member must match the
/// class rule {2-h, h, 4-h, 2+h, ...} unless an annotation explains it.
inline FixtureOutcome validate_group_fixture(const GroupFixture& fixture) {
  FixtureOutcome outcome;
  outcome.name = fixture.name;
  outcome.kind = "group";
  const auto annotated_at = [&](int ci, int mi) {
    for (const MemberAnnotation& note : fixture.annotations)
      if (note.class_index == ci && note.member_index == mi) return true;
    return false;
  };
  for (std::size_t i = 0; i + 1 < fixture.classes.size(); ++i) {
    const Ratio& h1 = fixture.classes[i].h;
    const Ratio& h2 = fixture.classes[i + 1].h;
    ++outcome.checks;
    if (!is_unimodular(h1, h2)) {
      ++outcome.failures;
      outcome.details.push_back("failed: dimensions " + h1.str() + " -> " +
                                h2.str() + " are not unimodular");
    }
    ++outcome.checks;
    const Ratio first1 = Ratio(2) - h1;
    const Ratio first2 = Ratio(2) - h2;
    if (!is_unimodular(first1, first2)) {
      ++outcome.failures;
      outcome.details.push_back("failed: first members " + first1.str() +
                                " -> " + first2.str() + " are not unimodular");
    }
  }
  for (std::size_t ci = 0; ci < fixture.classes.size(); ++ci) {
    const GroupClassFixture& cls = fixture.classes[ci];
    const UniversalClass derived =
        class_members(cls.h, static_cast<int>(cls.printed_members.size()));
    for (std::size_t mi = 0; mi < cls.printed_members.size(); ++mi) {
      ++outcome.checks;
      if (cls.printed_members[mi] == derived.members[mi]) continue;
      const std::string what =
          "class " + std::to_string(ci) + " (h=" + cls.h.str() + ") member " +
          std::to_string(mi) + ": printed " + cls.printed_members[mi].str() +
          ", rule gives " + derived.members[mi].str();
      if (annotated_at(static_cast<int>(ci), static_cast<int>(mi))) {
        ++outcome.annotated;
        outcome.details.push_back("annotated: " + what);
      } else {
        ++outcome.failures;
        outcome.details.push_back("failed: " + what);
      }
    }
  }
  // an annotation that explains nothing is itself a fixture defect
  for (const MemberAnnotation& note : fixture.annotations) {
    const bool in_range =
        note.class_index >= 0 &&
        note.class_index < static_cast<int>(fixture.classes.size()) &&
        note.member_index >= 0 &&
        note.member_index <
            static_cast<int>(
                fixture.classes[note.class_index].printed_members.size());
    bool stale = !in_range;
    if (in_range) {
      const GroupClassFixture& cls = fixture.classes[note.class_index];
      const UniversalClass derived =
          class_members(cls.h, static_cast<int>(cls.printed_members.size()));
      stale = cls.printed_members[note.member_index] ==
              derived.members[note.member_index];
    }
    if (stale) {
      ++outcome.failures;
      outcome.details.push_back(
          "failed: annotation for class " + std::to_string(note.class_index) +
          " member " + std::to_string(note.member_index) +
          " does not match any deviation");
    }
  }
  detail::finish_outcome(outcome);
  return outcome;
}

inline FixtureReport validate_fixtures(const FixtureSet& set) {
  FixtureReport report;
  for (const ChainFixture& chain : set.chains)
    report.outcomes.push_back(validate_chain_fixture(chain));
  for (const PairSetFixture& pairs : set.dual_pairs)
    report.outcomes.push_back(validate_pair_set(pairs));
  for (const GroupFixture& group : set.groups)
    report.outcomes.push_back(validate_group_fixture(group));
  for (const FixtureOutcome& outcome : report.outcomes) {
    report.total_checks += outcome.checks;
    report.total_failures += outcome.failures;
    report.total_annotated += outcome.annotated;
    report.ok = report.ok && outcome.pass;
  }
  return report;
}

}  // namespace fracton

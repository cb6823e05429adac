#include "sessiongraph/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sessiongraph/consensus.hpp"
#include "sessiongraph/errors.hpp"

namespace sg {
namespace {

constexpr std::string_view kHeader =
    "record,session_id,comment_id,author,timestamp,annotator_id,is_bullying,"
    "role,severity,topics,main_victim";
constexpr std::size_t kColumns = 11;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

std::string locator(const std::filesystem::path& path, std::size_t line_no) {
  return path.string() + ":" + std::to_string(line_no);
}

bool parse_bool(const std::string& text, const std::string& where) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ParseError(where + ": bad boolean '" + text + "'");
}

std::int64_t parse_timestamp(const std::string& text, const std::string& where) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(where + ": bad timestamp '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<RawSession> parse_corpus_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open corpus file: " + path.string());
  }

  std::map<std::string, RawSession> sessions;
  // (session, comment) -> bundle index; (session, comment, annotator) and
  // (session, annotator) vote pairs must be unique.
  std::map<std::pair<std::string, std::string>, std::size_t> bundle_of;
  std::set<std::tuple<std::string, std::string, std::string>> seen_annotations;
  std::set<std::pair<std::string, std::string>> seen_votes;

  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != kHeader) {
        throw ParseError(locator(path, line_no) + ": unexpected header, want '" +
                         std::string(kHeader) + "'");
      }
      saw_header = true;
      continue;
    }

    const std::string where = locator(path, line_no);
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != kColumns) {
      throw ParseError(where + ": expected " + std::to_string(kColumns) + " fields, got " +
                       std::to_string(f.size()));
    }
    const std::string& kind = f[0];
    const std::string& session_id = f[1];
    if (session_id.empty()) throw ParseError(where + ": empty session_id");
    RawSession& session = sessions[session_id];
    session.session_id = session_id;

    if (kind == "comment") {
      const std::string& comment_id = f[2];
      if (comment_id.empty()) throw ParseError(where + ": empty comment_id");
      if (f[5].empty()) throw ParseError(where + ": empty annotator_id");
      if (!seen_annotations.emplace(session_id, comment_id, f[5]).second) {
        throw ParseError(where + ": duplicate annotation by '" + f[5] + "' on comment '" +
                         comment_id + "'");
      }

      AnnotationRecord record;
      record.annotator_id = f[5];
      record.is_bullying = parse_bool(f[6], where);
      try {
        record.role = parse_role(f[7]);
        record.severity = parse_severity(f[8]);
      } catch (const UnknownRole& e) {
        throw UnknownRole(where + ": " + e.what());
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
      }
      if (!f[9].empty()) record.topics = split(f[9], ';');

      const auto bundle_key = std::make_pair(session_id, comment_id);
      auto it = bundle_of.find(bundle_key);
      if (it == bundle_of.end()) {
        CommentBundle bundle;
        bundle.comment_id = comment_id;
        bundle.session_id = session_id;
        bundle.author = f[3];
        bundle.timestamp = parse_timestamp(f[4], where);
        session.comments.push_back(std::move(bundle));
        it = bundle_of.emplace(bundle_key, session.comments.size() - 1).first;
      } else {
        const CommentBundle& bundle = session.comments[it->second];
        if (bundle.author != f[3] || bundle.timestamp != parse_timestamp(f[4], where)) {
          throw ParseError(where + ": comment '" + comment_id +
                           "' repeats with a different author or timestamp");
        }
      }
      CommentBundle& bundle = session.comments[it->second];
      if (bundle.annotations.size() >= 5) {
        throw ParseError(where + ": comment '" + comment_id + "' has more than 5 annotations");
      }
      bundle.annotations.push_back(std::move(record));
    } else if (kind == "victim_vote") {
      if (f[5].empty()) throw ParseError(where + ": empty annotator_id");
      if (!seen_votes.emplace(session_id, f[5]).second) {
        throw ParseError(where + ": duplicate main-victim vote by '" + f[5] + "'");
      }
      try {
        session.victim_votes.push_back(parse_victim_vote(f[10]));
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
      }
    } else {
      throw ParseError(where + ": unknown record kind '" + kind + "'");
    }
  }

  std::vector<RawSession> out;
  out.reserve(sessions.size());
  for (auto& [id, session] : sessions) out.push_back(std::move(session));
  return out;
}

IngestResult resolve_corpus(std::vector<RawSession> raw) {
  IngestResult result;
  result.stats.sessions_total = raw.size();

  std::sort(raw.begin(), raw.end(),
            [](const RawSession& a, const RawSession& b) { return a.session_id < b.session_id; });

  for (RawSession& session : raw) {
    result.stats.comments_total += session.comments.size();
    if (session.victim_votes.empty()) {
      ++result.stats.sessions_skipped_no_votes;
      result.stats.warnings.push_back("session '" + session.session_id +
                                      "' has no main-victim votes; skipped");
      continue;
    }

    // Participants/Other ties keep the session analyzable; flag them.
    {
      int participants = 0, other = 0, poster = 0;
      for (VictimVote vote : session.victim_votes) {
        if (vote == VictimVote::Participants) ++participants;
        else if (vote == VictimVote::Other) ++other;
        else ++poster;
      }
      if (participants == other && participants > poster) {
        result.stats.warnings.push_back("session '" + session.session_id +
                                        "': participants/other tie resolved to participants");
      }
    }

    const MainVictimLabel main_victim = resolve_main_victim(session.victim_votes);
    if (main_victim == MainVictimLabel::Other) {
      ++result.stats.sessions_excluded_other;
      continue;
    }

    ResolvedSession resolved;
    resolved.session_id = session.session_id;
    resolved.main_victim = main_victim;
    for (const CommentBundle& bundle : session.comments) {
      if (auto comment = resolve_comment(bundle)) {
        resolved.comments.push_back(std::move(*comment));
      } else {
        ++result.stats.comments_dropped_bystander;
      }
    }
    std::sort(resolved.comments.begin(), resolved.comments.end(),
              [](const ResolvedComment& a, const ResolvedComment& b) {
                return std::tie(a.timestamp, a.comment_id) < std::tie(b.timestamp, b.comment_id);
              });
    for (std::size_t i = 0; i < resolved.comments.size(); ++i) {
      resolved.comments[i].sequence = static_cast<int>(i) + 1;
    }
    result.sessions.push_back(std::move(resolved));
  }

  result.stats.sessions_retained = result.sessions.size();
  return result;
}

IngestResult ingest_corpus(const std::filesystem::path& path) {
  IngestResult result = resolve_corpus(parse_corpus_csv(path));
  if (result.stats.sessions_total == 0) {
    result.stats.warnings.push_back("corpus '" + path.string() + "' contains no sessions");
  }
  return result;
}

}  // namespace sg

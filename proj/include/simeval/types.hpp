#pragma once

#include <string>
#include <unordered_map>

namespace simeval {

struct Query {
  std::string query_id;
  std::string text;
  bool operator==(const Query&) const = default;
};

struct Passage {
  std::string passage_id;
  std::string text;
  bool operator==(const Passage&) const = default;
};

// One graded relevance judgment. Grades: 0 (not relevant), 1 (related but
// not relevant), 2 (highly relevant), 3 (perfectly relevant); binary sets
// use {0,1}.
struct QrelEntry {
  std::string query_id;
  std::string passage_id;
  int grade = 0;
  bool operator==(const QrelEntry&) const = default;
};

// One row of a 6-column TREC run file.
struct RunEntry {
  std::string query_id;
  std::string passage_id;
  int rank = 0;
  double score = 0.0;
  std::string run_tag;
  bool operator==(const RunEntry&) const = default;
};

// One system-generated answer for one query. answer_text may be empty;
// empty answers are flagged downstream and scored as similarity 0.
struct AnswerRecord {
  std::string query_id;
  std::string system_id;
  std::string answer_text;
  bool operator==(const AnswerRecord&) const = default;
};

using CollectionMap = std::unordered_map<std::string, Passage>;

}  // namespace simeval

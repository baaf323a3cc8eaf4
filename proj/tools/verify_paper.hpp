#pragma once

#include <string>
#include <vector>

namespace hypercore::tools {

struct ExampleReport {
  std::string id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;
};

const std::vector<std::string>& known_examples();

/// Recomputes the example from scratch and diffs it against the golden
/// values stored under fixtures_dir. Throws std::invalid_argument for an
/// unknown id and std::runtime_error when the fixture file is unreadable.
ExampleReport verify_example(const std::string& id,
                             const std::string& fixtures_dir);

}  // namespace hypercore::tools

#include "enumfpt/problems.hpp"

#include <memory>

#include "enumfpt/closest_string.hpp"
#include "enumfpt/fvst.hpp"
#include "enumfpt/ilp.hpp"
#include "enumfpt/longest_path.hpp"
#include "enumfpt/steiner.hpp"
#include "enumfpt/vertex_cover.hpp"

namespace enumfpt {

SolutionStream enumerate(ProblemKind kind, const Instance& instance, std::size_t k, RunOptions options) {
  switch (kind) {
    case ProblemKind::fvst:
      return fvst::enumerate(std::make_shared<const Tournament>(std::get<Tournament>(instance)), k, options);
    case ProblemKind::closest_string:
      return closest_string::enumerate(std::make_shared<const StringSet>(std::get<StringSet>(instance)), k, options);
    case ProblemKind::ilp:
      return ilp::enumerate(std::make_shared<const IlpSystem>(std::get<IlpSystem>(instance)), options);
    case ProblemKind::longest_path:
      return longest_path::enumerate(std::make_shared<const Graph>(std::get<Graph>(instance)), static_cast<int>(k),
                                     options);
    case ProblemKind::vertex_cover:
      return vertex_cover::enumerate(std::make_shared<const Graph>(std::get<Graph>(instance)), k, options);
    case ProblemKind::steiner:
      return steiner::enumerate(std::make_shared<const Graph>(std::get<Graph>(instance)), options);
  }
  return empty_stream<Solution>();
}

}  // namespace enumfpt

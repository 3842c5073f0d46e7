#pragma once

#include <string>
#include <vector>

#include "stackgame/mat.hpp"

namespace stackgame {

/// Finite sample set. Inputs live in [0,1]^n, labels are 1-based. The id is
/// a content hash, so artifacts derived from a dataset can be re-bound to it
/// safely after a round trip through disk.
struct Dataset {
    std::vector<Vec> inputs;
    std::vector<int> labels;
    std::string id;

    int size() const { return static_cast<int>(inputs.size()); }
    int dim() const { return inputs.empty() ? 0 : static_cast<int>(inputs.front().size()); }
    int num_labels() const;
};

/// Validates invariants (non-empty, consistent dims, entries in [0,1],
/// labels >= 1) and stamps the content hash.
Dataset make_dataset(std::vector<Vec> inputs, std::vector<int> labels);

std::string dataset_content_hash(const std::vector<Vec>& inputs, const std::vector<int>& labels);

}  // namespace stackgame

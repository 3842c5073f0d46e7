#include "stackgame/dataset.hpp"

#include <algorithm>
#include <string>

#include "stackgame/errors.hpp"
#include "stackgame/util.hpp"

namespace stackgame {

int Dataset::num_labels() const {
    int m = 0;
    for (int y : labels) m = std::max(m, y);
    return m;
}

std::string dataset_content_hash(const std::vector<Vec>& inputs, const std::vector<int>& labels) {
    ContentHash h;
    h.update_int(static_cast<std::int64_t>(inputs.size()));
    h.update_int(inputs.empty() ? 0 : static_cast<std::int64_t>(inputs.front().size()));
    for (const Vec& x : inputs)
        for (double v : x) h.update_double(v);
    for (int y : labels) h.update_int(y);
    return h.hex();
}

Dataset make_dataset(std::vector<Vec> inputs, std::vector<int> labels) {
    if (inputs.empty()) throw ValidationError("dataset must contain at least one sample");
    if (inputs.size() != labels.size())
        throw ValidationError("dataset has " + std::to_string(inputs.size()) + " inputs but " +
                              std::to_string(labels.size()) + " labels");
    const std::size_t n = inputs.front().size();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].size() != n)
            throw ValidationError("sample " + std::to_string(i) + " has inconsistent dimension");
        for (double v : inputs[i])
            if (!(v >= 0.0 && v <= 1.0))
                throw ValidationError("sample " + std::to_string(i) +
                                      " has a coordinate outside [0,1]: " + std::to_string(v));
        if (labels[i] < 1)
            throw ValidationError("sample " + std::to_string(i) + " has label " +
                                  std::to_string(labels[i]) + "; labels are 1-based");
    }
    Dataset d;
    d.inputs = std::move(inputs);
    d.labels = std::move(labels);
    d.id = dataset_content_hash(d.inputs, d.labels);
    return d;
}

}  // namespace stackgame

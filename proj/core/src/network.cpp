#include "stackgame/network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stackgame/errors.hpp"
#include "stackgame/rng.hpp"

namespace stackgame {

Network make_network(std::vector<int> layer_dims, double clip_bound, std::uint64_t seed) {
    if (layer_dims.size() < 2)
        throw DimensionError("network needs at least an input and an output layer");
    for (int d : layer_dims)
        if (d < 1) throw DimensionError("layer dims must be positive");
    if (clip_bound <= 0.0) throw ValueError("clip bound E must be positive");

    Network net;
    net.layer_dims = std::move(layer_dims);
    net.clip_bound = clip_bound;
    net.seed = seed;
    Rng rng(derive_seed(seed, /*stream=*/0x1017));
    for (std::size_t l = 1; l < net.layer_dims.size(); ++l) {
        int fan_in = net.layer_dims[l - 1];
        int fan_out = net.layer_dims[l];
        double scale = 1.0 / std::sqrt(static_cast<double>(fan_in));
        Mat w(fan_out, fan_in);
        for (double& v : w.data) v = rng.uniform(-scale, scale);
        net.weights.push_back(std::move(w));
        net.biases.emplace_back(fan_out, 0.0);
    }
    return project_params(std::move(net));
}

void validate_shape(const Network& net) {
    if (net.layer_dims.size() != net.weights.size() + 1 || net.weights.size() != net.biases.size())
        throw DimensionError("layer bookkeeping out of sync");
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        const Mat& w = net.weights[l];
        if (w.rows != net.layer_dims[l + 1] || w.cols != net.layer_dims[l])
            throw DimensionError("weight matrix " + std::to_string(l) + " has shape " +
                                 std::to_string(w.rows) + "x" + std::to_string(w.cols) +
                                 ", expected " + std::to_string(net.layer_dims[l + 1]) + "x" +
                                 std::to_string(net.layer_dims[l]));
        if (static_cast<int>(net.biases[l].size()) != net.layer_dims[l + 1])
            throw DimensionError("bias vector " + std::to_string(l) + " has wrong length");
    }
}

namespace {

void check_input(const Network& net, const Vec& x) {
    if (static_cast<int>(x.size()) != net.input_dim())
        throw DimensionError("input length " + std::to_string(x.size()) + " does not match n=" +
                             std::to_string(net.input_dim()));
}

}  // namespace

Vec forward(const Network& net, const Vec& x) {
    check_input(net, x);
    Vec h = x;
    const int d = net.depth();
    for (int l = 0; l < d; ++l) {
        Vec z = matvec(net.weights[l], h);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += net.biases[l][i];
        if (l + 1 < d)
            for (double& v : z) v = v > 0.0 ? v : 0.0;
        h = std::move(z);
    }
    return h;
}

int classify(const Network& net, const Vec& x) {
    Vec z = forward(net, x);
    int arg = 0;
    for (int i = 1; i < static_cast<int>(z.size()); ++i)
        if (z[i] > z[arg]) arg = i;
    return arg + 1;
}

GradientPack gradients(const Network& net, const Vec& x, int label, const LossSpec& loss) {
    check_input(net, x);
    if (loss.kind == LossKind::adv01) throw LossError("adv01 loss is not differentiable");

    const int d = net.depth();
    // Forward pass keeping pre-activations; activations[l] is the input to layer l.
    std::vector<Vec> activations(d + 1);
    std::vector<Vec> preacts(d);
    activations[0] = x;
    for (int l = 0; l < d; ++l) {
        Vec z = matvec(net.weights[l], activations[l]);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += net.biases[l][i];
        preacts[l] = z;
        if (l + 1 < d)
            for (double& v : z) v = v > 0.0 ? v : 0.0;
        activations[l + 1] = std::move(z);
    }

    GradientPack pack;
    pack.loss_value = eval_loss(loss, activations[d], label);
    pack.wrt_params.assign(param_count(net), 0.0);

    Vec delta = grad_loss(loss, activations[d], label);
    // Walk layers backwards, filling the flat gradient from the back.
    std::size_t offset = pack.wrt_params.size();
    for (int l = d - 1; l >= 0; --l) {
        const Mat& w = net.weights[l];
        const Vec& in = activations[l];
        offset -= static_cast<std::size_t>(w.rows) * w.cols + w.rows;
        double* wgrad = pack.wrt_params.data() + offset;
        double* bgrad = wgrad + static_cast<std::size_t>(w.rows) * w.cols;
        for (int i = 0; i < w.rows; ++i) {
            for (int j = 0; j < w.cols; ++j) wgrad[static_cast<std::size_t>(i) * w.cols + j] = delta[i] * in[j];
            bgrad[i] = delta[i];
        }
        delta = matvec_transpose(w, delta);
        if (l > 0) {
            // ReLU mask of the previous layer; subgradient 0 at the kink.
            const Vec& z = preacts[l - 1];
            for (std::size_t i = 0; i < delta.size(); ++i)
                if (z[i] <= 0.0) delta[i] = 0.0;
        }
    }
    pack.wrt_input = std::move(delta);
    return pack;
}

Network project_params(Network net) {
    const double e = net.clip_bound;
    for (Mat& w : net.weights)
        for (double& v : w.data) v = std::clamp(v, -e, e);
    for (Vec& b : net.biases)
        for (double& v : b) v = std::clamp(v, -e, e);
    return net;
}

int param_count(const Network& net) {
    int k = 0;
    for (std::size_t l = 0; l < net.weights.size(); ++l)
        k += net.weights[l].rows * net.weights[l].cols + static_cast<int>(net.biases[l].size());
    return k;
}

Vec flatten_params(const Network& net) {
    Vec flat;
    flat.reserve(param_count(net));
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        flat.insert(flat.end(), net.weights[l].data.begin(), net.weights[l].data.end());
        flat.insert(flat.end(), net.biases[l].begin(), net.biases[l].end());
    }
    return flat;
}

Network with_params(Network net, const Vec& flat) {
    if (static_cast<int>(flat.size()) != param_count(net))
        throw DimensionError("flat parameter vector has length " + std::to_string(flat.size()) +
                             ", expected " + std::to_string(param_count(net)));
    std::size_t pos = 0;
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        Mat& w = net.weights[l];
        std::copy_n(flat.begin() + pos, w.data.size(), w.data.begin());
        pos += w.data.size();
        std::copy_n(flat.begin() + pos, net.biases[l].size(), net.biases[l].begin());
        pos += net.biases[l].size();
    }
    return net;
}

}  // namespace stackgame

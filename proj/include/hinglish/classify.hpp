#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hinglish/features.hpp"

namespace hinglish {

struct Split {
    std::vector<size_t> train;
    std::vector<size_t> test;
    uint64_t seed = 0;
    double test_fraction = 0.2;
    bool stratified = true;
};

// Deterministic under seed. Stratified: per-class test count is
// round(fraction * class size), so each class's test share is within one item
// of the fraction.
Split make_split(const std::vector<std::string>& labels, uint64_t seed,
                 double test_fraction = 0.2, bool stratified = true);

// Row-major sparse view of a FeatureMatrix; what the models train on.
struct SparseRows {
    size_t cols = 0;
    std::vector<std::vector<std::pair<size_t, double>>> rows;

    static SparseRows from(const FeatureMatrix& m);
};

class NaiveBayes {
public:
    // Multinomial NB with additive smoothing. Throws ValidationError when
    // fewer than two classes are present.
    static NaiveBayes train(const FeatureMatrix& x, const std::vector<std::string>& y,
                            double alpha = 1.0);

    std::vector<std::string> predict(const FeatureMatrix& x) const;
    // log prior + sum_t x_t * log p(t|c), in classes() order.
    std::vector<double> joint_log_likelihood(
        const std::vector<std::pair<size_t, double>>& row) const;

    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<double>& log_prior() const { return log_prior_; }

private:
    std::vector<std::string> classes_;
    std::vector<double> log_prior_;
    std::vector<std::vector<double>> log_lik_;  // [class][term]
};

struct LogRegOptions {
    double l2 = 0.0;
    size_t epochs = 200;
    double lr = 0.5;
    uint64_t seed = 0;  // recorded for the manifest; the fit itself is deterministic
};

// One-vs-rest logistic regression, full-batch gradient descent on
// cross-entropy + L2. Weights start at zero with prior-logit biases, so a
// zero-epoch model predicts the class-prior argmax (ties: lowest class index).
class LogisticRegression {
public:
    static LogisticRegression train(const FeatureMatrix& x, const std::vector<std::string>& y,
                                    const LogRegOptions& opts = {});

    std::vector<std::string> predict(const FeatureMatrix& x) const;
    std::vector<double> scores(const std::vector<std::pair<size_t, double>>& row) const;

    const std::vector<std::string>& classes() const { return classes_; }
    // Summed OvR loss sampled before each epoch and after the last one.
    const std::vector<double>& losses() const { return losses_; }

private:
    std::vector<std::string> classes_;
    std::vector<std::vector<double>> weights_;  // [class][term]
    std::vector<double> bias_;
    std::vector<double> losses_;
};

// Binary cross-entropy + (l2/2)*||w||^2 over sparse rows, and its analytic
// gradient. The training loop runs on these; tests check them against central
// finite differences.
double binary_logreg_loss(const SparseRows& x, const std::vector<double>& y01,
                          const std::vector<double>& w, double b, double l2);
void binary_logreg_gradient(const SparseRows& x, const std::vector<double>& y01,
                            const std::vector<double>& w, double b, double l2,
                            std::vector<double>* grad_w, double* grad_b);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    size_t support = 0;
};

struct EvalReport {
    std::vector<std::string> labels;  // sorted union of true and predicted
    std::vector<ClassMetrics> per_class;
    ClassMetrics macro;     // unweighted mean over classes present in the test set
    ClassMetrics weighted;  // support-weighted mean
    std::vector<std::vector<size_t>> confusion;  // [true][pred]
    std::vector<std::vector<double>> confusion_normalized;

    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
};

EvalReport evaluate(const std::vector<std::string>& y_true,
                    const std::vector<std::string>& y_pred);

template <typename Model>
EvalReport evaluate(const Model& model, const FeatureMatrix& x_test,
                    const std::vector<std::string>& y_test) {
    return evaluate(y_test, model.predict(x_test));
}

}  // namespace hinglish

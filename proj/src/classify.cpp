#include "hinglish/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "hinglish/errors.hpp"
#include "hinglish/rng.hpp"

namespace hinglish {

namespace {

std::vector<std::string> sorted_classes(const std::vector<std::string>& y) {
    std::set<std::string> s(y.begin(), y.end());
    return {s.begin(), s.end()};
}

size_t round_count(double x) { return static_cast<size_t>(std::floor(x + 0.5)); }

double sigmoid(double z) {
    if (z >= 0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    double e = std::exp(z);
    return e / (1.0 + e);
}

// max(z,0) - z*y + log(1+exp(-|z|)): the stable form of -y*ln(s)-(1-y)*ln(1-s)
double cross_entropy(double z, double y) {
    return std::max(z, 0.0) - z * y + std::log1p(std::exp(-std::abs(z)));
}

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

Split make_split(const std::vector<std::string>& labels, uint64_t seed,
                 double test_fraction, bool stratified) {
    if (labels.empty()) throw ValidationError("cannot split an empty label set");
    if (test_fraction < 0.0 || test_fraction > 1.0) {
        throw ValidationError("test_fraction must be in [0,1]");
    }

    Split split;
    split.seed = seed;
    split.test_fraction = test_fraction;
    split.stratified = stratified;
    Rng rng(seed);

    if (stratified) {
        std::map<std::string, std::vector<size_t>> by_class;
        for (size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
        for (auto& [_, idx] : by_class) {
            rng.shuffle(idx);
            size_t n_test = round_count(test_fraction * static_cast<double>(idx.size()));
            for (size_t k = 0; k < idx.size(); ++k) {
                (k < n_test ? split.test : split.train).push_back(idx[k]);
            }
        }
    } else {
        std::vector<size_t> idx(labels.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        rng.shuffle(idx);
        size_t n_test = round_count(test_fraction * static_cast<double>(idx.size()));
        for (size_t k = 0; k < idx.size(); ++k) {
            (k < n_test ? split.test : split.train).push_back(idx[k]);
        }
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

SparseRows SparseRows::from(const FeatureMatrix& m) {
    SparseRows s;
    s.cols = m.vocab.size();
    s.rows.resize(m.rows);
    for (const Triple& t : m.values) {
        s.rows[t.doc].emplace_back(t.term, t.weight);
    }
    return s;
}

NaiveBayes NaiveBayes::train(const FeatureMatrix& x, const std::vector<std::string>& y,
                             double alpha) {
    if (y.size() != x.rows) throw ValidationError("label count does not match row count");
    NaiveBayes nb;
    nb.classes_ = sorted_classes(y);
    if (nb.classes_.size() < 2) {
        throw ValidationError("Naive Bayes needs at least two classes in the training set");
    }

    std::map<std::string, size_t> class_index;
    for (size_t c = 0; c < nb.classes_.size(); ++c) class_index[nb.classes_[c]] = c;

    const size_t n_classes = nb.classes_.size();
    const size_t n_terms = x.vocab.size();
    std::vector<double> class_docs(n_classes, 0.0);
    std::vector<std::vector<double>> term_mass(n_classes, std::vector<double>(n_terms, 0.0));

    for (const std::string& label : y) ++class_docs[class_index[label]];
    for (const Triple& t : x.values) {
        term_mass[class_index[y[t.doc]]][t.term] += t.weight;
    }

    nb.log_prior_.resize(n_classes);
    nb.log_lik_.assign(n_classes, std::vector<double>(n_terms, 0.0));
    for (size_t c = 0; c < n_classes; ++c) {
        nb.log_prior_[c] = std::log(class_docs[c] / static_cast<double>(y.size()));
        double total = 0.0;
        for (double m : term_mass[c]) total += m;
        double denom = total + alpha * static_cast<double>(n_terms);
        for (size_t t = 0; t < n_terms; ++t) {
            nb.log_lik_[c][t] = std::log((term_mass[c][t] + alpha) / denom);
        }
    }
    return nb;
}

std::vector<double> NaiveBayes::joint_log_likelihood(
    const std::vector<std::pair<size_t, double>>& row) const {
    std::vector<double> jll(classes_.size());
    for (size_t c = 0; c < classes_.size(); ++c) {
        double s = log_prior_[c];
        for (const auto& [term, weight] : row) s += weight * log_lik_[c][term];
        jll[c] = s;
    }
    return jll;
}

std::vector<std::string> NaiveBayes::predict(const FeatureMatrix& x) const {
    SparseRows rows = SparseRows::from(x);
    std::vector<std::string> out;
    out.reserve(rows.rows.size());
    for (const auto& row : rows.rows) {
        std::vector<double> jll = joint_log_likelihood(row);
        size_t best = 0;
        for (size_t c = 1; c < jll.size(); ++c) {
            if (jll[c] > jll[best]) best = c;
        }
        out.push_back(classes_[best]);
    }
    return out;
}

double binary_logreg_loss(const SparseRows& x, const std::vector<double>& y01,
                          const std::vector<double>& w, double b, double l2) {
    double loss = 0.0;
    for (size_t d = 0; d < x.rows.size(); ++d) {
        double z = b;
        for (const auto& [term, weight] : x.rows[d]) z += w[term] * weight;
        loss += cross_entropy(z, y01[d]);
    }
    loss /= static_cast<double>(x.rows.size());
    double reg = 0.0;
    for (double wi : w) reg += wi * wi;
    return loss + 0.5 * l2 * reg;
}

void binary_logreg_gradient(const SparseRows& x, const std::vector<double>& y01,
                            const std::vector<double>& w, double b, double l2,
                            std::vector<double>* grad_w, double* grad_b) {
    grad_w->assign(w.size(), 0.0);
    double gb = 0.0;
    const double inv_n = 1.0 / static_cast<double>(x.rows.size());
    for (size_t d = 0; d < x.rows.size(); ++d) {
        double z = b;
        for (const auto& [term, weight] : x.rows[d]) z += w[term] * weight;
        double err = (sigmoid(z) - y01[d]) * inv_n;
        for (const auto& [term, weight] : x.rows[d]) (*grad_w)[term] += err * weight;
        gb += err;
    }
    for (size_t t = 0; t < w.size(); ++t) (*grad_w)[t] += l2 * w[t];
    *grad_b = gb;
}

LogisticRegression LogisticRegression::train(const FeatureMatrix& x,
                                             const std::vector<std::string>& y,
                                             const LogRegOptions& opts) {
    if (y.size() != x.rows) throw ValidationError("label count does not match row count");
    LogisticRegression lr;
    lr.classes_ = sorted_classes(y);
    if (lr.classes_.size() < 2) {
        throw ValidationError("logistic regression needs at least two classes");
    }

    SparseRows rows = SparseRows::from(x);
    const size_t n_classes = lr.classes_.size();
    const size_t n_terms = x.vocab.size();

    std::vector<std::vector<double>> targets(n_classes, std::vector<double>(y.size(), 0.0));
    std::vector<double> prior(n_classes, 0.0);
    for (size_t d = 0; d < y.size(); ++d) {
        for (size_t c = 0; c < n_classes; ++c) {
            if (y[d] == lr.classes_[c]) {
                targets[c][d] = 1.0;
                prior[c] += 1.0;
            }
        }
    }

    lr.weights_.assign(n_classes, std::vector<double>(n_terms, 0.0));
    lr.bias_.resize(n_classes);
    for (size_t c = 0; c < n_classes; ++c) {
        double p = prior[c] / static_cast<double>(y.size());
        lr.bias_[c] = std::log(p / (1.0 - p));  // prior logit; p < 1 since >= 2 classes
    }

    auto total_loss = [&] {
        double sum = 0.0;
        for (size_t c = 0; c < n_classes; ++c) {
            sum += binary_logreg_loss(rows, targets[c], lr.weights_[c], lr.bias_[c], opts.l2);
        }
        return sum;
    };

    lr.losses_.reserve(opts.epochs + 1);
    std::vector<double> grad_w;
    double grad_b = 0.0;
    for (size_t epoch = 0; epoch < opts.epochs; ++epoch) {
        double loss = total_loss();
        if (!std::isfinite(loss)) {
            throw ValidationError("logistic regression training diverged (non-finite loss)");
        }
        lr.losses_.push_back(loss);
        for (size_t c = 0; c < n_classes; ++c) {
            binary_logreg_gradient(rows, targets[c], lr.weights_[c], lr.bias_[c], opts.l2,
                                   &grad_w, &grad_b);
            for (size_t t = 0; t < n_terms; ++t) lr.weights_[c][t] -= opts.lr * grad_w[t];
            lr.bias_[c] -= opts.lr * grad_b;
        }
    }
    double final_loss = total_loss();
    if (!std::isfinite(final_loss)) {
        throw ValidationError("logistic regression training diverged (non-finite loss)");
    }
    lr.losses_.push_back(final_loss);
    return lr;
}

std::vector<double> LogisticRegression::scores(
    const std::vector<std::pair<size_t, double>>& row) const {
    std::vector<double> s(classes_.size());
    for (size_t c = 0; c < classes_.size(); ++c) {
        double z = bias_[c];
        for (const auto& [term, weight] : row) z += weights_[c][term] * weight;
        s[c] = z;
    }
    return s;
}

std::vector<std::string> LogisticRegression::predict(const FeatureMatrix& x) const {
    SparseRows rows = SparseRows::from(x);
    std::vector<std::string> out;
    out.reserve(rows.rows.size());
    for (const auto& row : rows.rows) {
        std::vector<double> s = scores(row);
        size_t best = 0;
        for (size_t c = 1; c < s.size(); ++c) {
            if (s[c] > s[best]) best = c;
        }
        out.push_back(classes_[best]);
    }
    return out;
}

EvalReport evaluate(const std::vector<std::string>& y_true,
                    const std::vector<std::string>& y_pred) {
    if (y_true.empty()) throw ValidationError("cannot evaluate an empty test set");
    if (y_true.size() != y_pred.size()) {
        throw ValidationError("prediction count does not match test set size");
    }

    EvalReport rep;
    std::set<std::string> label_set(y_true.begin(), y_true.end());
    label_set.insert(y_pred.begin(), y_pred.end());
    rep.labels.assign(label_set.begin(), label_set.end());

    std::map<std::string, size_t> index;
    for (size_t i = 0; i < rep.labels.size(); ++i) index[rep.labels[i]] = i;

    const size_t k = rep.labels.size();
    rep.confusion.assign(k, std::vector<size_t>(k, 0));
    for (size_t d = 0; d < y_true.size(); ++d) {
        ++rep.confusion[index[y_true[d]]][index[y_pred[d]]];
    }

    rep.per_class.resize(k);
    std::vector<size_t> col_sum(k, 0);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) col_sum[j] += rep.confusion[i][j];
    }

    size_t present = 0;
    for (size_t i = 0; i < k; ++i) {
        size_t tp = rep.confusion[i][i];
        size_t row_sum = 0;
        for (size_t j = 0; j < k; ++j) row_sum += rep.confusion[i][j];
        ClassMetrics& m = rep.per_class[i];
        m.support = row_sum;
        m.precision = col_sum[i] ? static_cast<double>(tp) / static_cast<double>(col_sum[i]) : 0.0;
        m.recall = row_sum ? static_cast<double>(tp) / static_cast<double>(row_sum) : 0.0;
        m.f1 = (m.precision + m.recall) > 0.0
                   ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                   : 0.0;
        if (row_sum > 0) {
            ++present;
            rep.macro.precision += m.precision;
            rep.macro.recall += m.recall;
            rep.macro.f1 += m.f1;
            rep.weighted.precision += m.precision * static_cast<double>(row_sum);
            rep.weighted.recall += m.recall * static_cast<double>(row_sum);
            rep.weighted.f1 += m.f1 * static_cast<double>(row_sum);
        }
    }
    if (present > 0) {
        rep.macro.precision /= static_cast<double>(present);
        rep.macro.recall /= static_cast<double>(present);
        rep.macro.f1 /= static_cast<double>(present);
    }
    rep.macro.support = y_true.size();
    rep.weighted.precision /= static_cast<double>(y_true.size());
    rep.weighted.recall /= static_cast<double>(y_true.size());
    rep.weighted.f1 /= static_cast<double>(y_true.size());
    rep.weighted.support = y_true.size();

    rep.confusion_normalized.assign(k, std::vector<double>(k, 0.0));
    for (size_t i = 0; i < k; ++i) {
        size_t row_sum = rep.per_class[i].support;
        if (!row_sum) continue;
        for (size_t j = 0; j < k; ++j) {
            rep.confusion_normalized[i][j] =
                static_cast<double>(rep.confusion[i][j]) / static_cast<double>(row_sum);
        }
    }
    return rep;
}

nlohmann::ordered_json EvalReport::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json per;
    for (size_t i = 0; i < labels.size(); ++i) {
        const ClassMetrics& m = per_class[i];
        per[labels[i]] = {{"p", m.precision}, {"r", m.recall}, {"f1", m.f1}, {"support", m.support}};
    }
    j["per_class"] = per;
    j["macro"] = {{"p", macro.precision}, {"r", macro.recall}, {"f1", macro.f1}};
    j["weighted"] = {{"p", weighted.precision}, {"r", weighted.recall}, {"f1", weighted.f1}};
    j["labels"] = labels;
    j["confusion"] = confusion;
    j["confusion_normalized"] = confusion_normalized;
    return j;
}

std::string EvalReport::to_table() const {
    size_t width = 8;
    for (const std::string& l : labels) width = std::max(width, l.size());
    std::ostringstream out;
    auto pad = [&](const std::string& s) {
        out << s;
        for (size_t i = s.size(); i < width + 2; ++i) out << ' ';
    };
    pad("class");
    out << "precision  recall  f1      support\n";
    for (size_t i = 0; i < labels.size(); ++i) {
        const ClassMetrics& m = per_class[i];
        pad(labels[i]);
        out << fmt4(m.precision) << "     " << fmt4(m.recall) << "  " << fmt4(m.f1) << "  "
            << m.support << '\n';
    }
    pad("macro");
    out << fmt4(macro.precision) << "     " << fmt4(macro.recall) << "  " << fmt4(macro.f1)
        << "  " << macro.support << '\n';
    pad("weighted");
    out << fmt4(weighted.precision) << "     " << fmt4(weighted.recall) << "  "
        << fmt4(weighted.f1) << "  " << weighted.support << '\n';
    return out.str();
}

}  // namespace hinglish

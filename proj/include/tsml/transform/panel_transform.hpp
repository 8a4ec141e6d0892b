#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsml/estimator.hpp"
#include "tsml/panel.hpp"
#include "tsml/transform/binning.hpp"
#include "tsml/transform/detrend.hpp"
#include "tsml/transform/summary.hpp"

namespace tsml::transform {

enum class TransformerKind { Tabular, SeriesToPrimitives, SeriesToSeries, Detrending };

/**
 * @brief Panel-to-panel transformation step. Stateless transformers keep
 *        do_fit empty; per-instance state is computed inside do_transform so
 *        each instance is handled in isolation.
 */
class PanelTransformer : public Estimator {
  public:
    virtual TransformerKind kind() const = 0;

    void fit(const Panel& panel);
    Panel transform(const Panel& panel) const;
    Panel fit_transform(const Panel& panel);

  protected:
    virtual void do_fit(const Panel& panel);
    virtual Panel do_transform(const Panel& panel) const = 0;
};

/**
 * @brief Expands equal-length series columns into one numeric column per time
 *        position ("<col>_<position>"); primitive columns pass through.
 */
class TabularizeTransformer : public PanelTransformer {
  public:
    TransformerKind kind() const override { return TransformerKind::Tabular; }
    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    Panel do_transform(const Panel& panel) const override;
};

/**
 * @brief Reduces each series column to primitive columns "<col>_<feature>";
 *        primitive columns pass through.
 */
class SummaryFeatureTransformer : public PanelTransformer {
  public:
    explicit SummaryFeatureTransformer(std::vector<SummaryFeature> features = {
                                           SummaryFeature::Mean, SummaryFeature::Std,
                                           SummaryFeature::Slope});

    TransformerKind kind() const override { return TransformerKind::SeriesToPrimitives; }
    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;
    Panel do_transform(const Panel& panel) const override;

  private:
    std::vector<SummaryFeature> features_;
};

/**
 * @brief Applies time binning to every series cell.
 */
class TimeBinTransformer : public PanelTransformer {
  public:
    explicit TimeBinTransformer(std::int64_t n_bins = 2, Aggregation agg = Aggregation::Mean);

    TransformerKind kind() const override { return TransformerKind::SeriesToSeries; }
    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;
    Panel do_transform(const Panel& panel) const override;

  private:
    std::int64_t n_bins_;
    Aggregation agg_;
};

/**
 * @brief Detrends every series cell with a fresh clone of the wrapped
 *        detrender, fitted per instance.
 */
class PanelDetrender : public PanelTransformer {
  public:
    explicit PanelDetrender(Detrender prototype = Detrender(1));

    TransformerKind kind() const override { return TransformerKind::Detrending; }
    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    std::vector<std::pair<std::string, const Estimator*>> components() const override;
    std::vector<std::pair<std::string, Estimator*>> components() override;
    Panel do_transform(const Panel& panel) const override;

  private:
    Detrender prototype_;
};

}  // namespace tsml::transform

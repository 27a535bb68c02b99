"""Command line of the serial EMD.

Usage examples::

    serialemd synth signals --out data
    serialemd decompose data/signals.csv --algo emd --d 50 --out imfs
    serialemd bench --scenario multivariate-algos --reps 10
    serialemd recognize --dataset orl_faces --range 2:7
    serialemd denoise face.pgm --drop 2

Exit status: 0 on success, 2 for bad input, 3 when the face dataset is missing.

"""

import json
import logging
import os
import sys

import numpy as np

from . import synth
from .bench import BenchError, bench_suite
from .default_parser import process_args
from .experiment import base_controllers as bc
from .helper.ensemble import EnsembleConfig
from .helper.netpbm import FormatError, read_csv_matrix, read_pgm, to_uint8, write_csv_matrix, write_pgm
from .helper.sifting import InsufficientExtremaError, SiftConfig, SignalError
from .recognition import (DatasetError, DatasetNotFoundError, ImfRange, decompose_dataset, evaluate_range,
                          load_orl, noisy_images, sweep_ranges, best_range)
from .recognition import denoise as recognition_denoise
from .serializer import SerializationError, TransitionSpec, serial_decompose, imf_tensor_to_images

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_DATASET_MISSING = 3


class Defaults:
    # ----------------------
    # Decomposition parameters
    # ----------------------
    ALGO = "emd"
    D = "auto"
    NSTD = 0.2
    NR = 100
    SD_THRESHOLD = 0.2
    MAX_SIFT_ITERS = 300
    MAX_IMFS = None
    SEED = 0
    N_JOBS = 1

    # ----------------------
    # Synthetic data
    # ----------------------
    N_SAMPLES = 1000
    FS = 1000.
    SNR_DB = -6.

    # ----------------------
    # Benchmark
    # ----------------------
    SCENARIO = "multivariate-algos"
    REPS = 10

    # ----------------------
    # Recognition and denoising
    # ----------------------
    IMF_RANGE = "2:7"
    K = 1
    FOLDS = 10
    DROP = 2

    OUT = "."


class RunConfig(object):
    """Validated parameters of a decomposition run.

    Parameters
    -----------
    algorithm : str
        'emd', 'eemd' or 'ceemdan'
    D : int or 'auto'
        Transition length; 'auto' is resolved per input as 20% of the channel length
    sift_config : SiftConfig
    ensemble_config : EnsembleConfig
    seed : int
    out : str
        Output directory
    """

    def __init__(self, algorithm="emd", D="auto", sift_config=None, ensemble_config=None, seed=0, out="."):
        if algorithm == "eemdan":
            algorithm = "ceemdan"
        if algorithm not in ("emd", "eemd", "ceemdan"):
            raise SignalError("unknown algorithm '{}'".format(algorithm))
        if D != "auto":
            TransitionSpec(D)
        self.algorithm = algorithm
        self.D = D
        self.sift_config = sift_config if sift_config is not None else SiftConfig()
        self.ensemble_config = ensemble_config if ensemble_config is not None else EnsembleConfig(base_seed=seed)
        self.seed = seed
        self.out = out

    @classmethod
    def fromArgs(cls, parameters):
        """ Builds the configuration from the namespace returned by process_args()
        """
        sift_config = SiftConfig(sd_threshold=parameters.sd_threshold, max_sift_iters=parameters.max_sift_iters,
                                 max_imfs=parameters.max_imfs)
        ensemble_config = EnsembleConfig(nstd=parameters.nstd, nr=parameters.nr, base_seed=parameters.seed,
                                         n_jobs=parameters.n_jobs)
        return cls(parameters.algo, parameters.D, sift_config, ensemble_config, parameters.seed, parameters.out)

    def transitionSpec(self, M):
        """ The transition of the run for channels of length [M]
        """
        if self.D == "auto":
            return TransitionSpec.fromLength(M)
        return TransitionSpec(self.D)

    def decompose(self, x):
        x = np.asarray(x, dtype=float)
        return serial_decompose(x, self.transitionSpec(x.shape[0]), self.algorithm, self.sift_config,
                                self.ensemble_config)


def _write_json(path, content):
    with open(path, "w") as f:
        json.dump(content, f, sort_keys=True, indent=2)


def _is_pgm(path):
    with open(path, "rb") as f:
        return f.read(2) == b"P5"


def cmd_decompose(input, cfg):
    """Decomposes a CSV multi-signal or a PGM image and writes its modes.

    CSV input gives mode_KK.csv files (same header as the input); PGM input gives mode_KK.pgm images
    rescaled to 0..255 and the raw values in mode_KK.csv. decomposition.json records M, N, D, K,
    the algorithm and the seed.

    Returns
    -------
    list of the written paths
    """
    if _is_pgm(input):
        x = read_pgm(input).astype(float)
        header = None
    else:
        header, x = read_csv_matrix(input)

    spec = cfg.transitionSpec(x.shape[0])
    tensor = cfg.decompose(x)
    os.makedirs(cfg.out, exist_ok=True)

    paths = []
    for k, mode in enumerate(imf_tensor_to_images(tensor)):
        base = os.path.join(cfg.out, "mode_{:02d}".format(k + 1))
        write_csv_matrix(base + ".csv", mode, header)
        paths.append(base + ".csv")
        if header is None:
            write_pgm(base + ".pgm", to_uint8(mode))
            paths.append(base + ".pgm")

    M, N, K = tensor.shape
    sidecar = os.path.join(cfg.out, "decomposition.json")
    _write_json(sidecar, {"M": M, "N": N, "D": spec.D, "K": K, "algorithm": cfg.algorithm, "seed": cfg.seed,
                          "input": os.path.basename(input)})
    paths.append(sidecar)
    logger.info("%d modes written to %s", K, cfg.out)
    return paths


def cmd_synth(kind, parameters):
    """Writes synthetic data in [parameters.out].

    'signals' gives signals.csv (one column per variate), 'ati' gives ati.pgm, atc1..3.pgm and the
    raw ati.csv, 'speckle' corrupts the PGM [parameters.input] into noisy.pgm and noisy.csv.

    Returns
    -------
    list of the written paths
    """
    out = parameters.out
    os.makedirs(out, exist_ok=True)
    if kind == "signals":
        x = synth.multivariate_sinusoids(n_samples=parameters.n_samples, fs=parameters.fs)
        path = os.path.join(out, "signals.csv")
        write_csv_matrix(path, x, list(synth.VARIATES))
        return [path]

    if kind == "ati":
        ati, atcs = synth.make_ati()
        paths = [os.path.join(out, "ati.pgm"), os.path.join(out, "ati.csv")]
        write_pgm(paths[0], to_uint8(ati))
        write_csv_matrix(paths[1], ati)
        for i, atc in enumerate(atcs):
            paths.append(os.path.join(out, "atc{}.pgm".format(i + 1)))
            write_pgm(paths[-1], to_uint8(atc))
        return paths

    if kind == "speckle":
        if not parameters.input:
            raise SignalError("synth speckle needs --input IMAGE.pgm")
        img = read_pgm(parameters.input).astype(float)
        noisy = synth.add_speckle(img, synth.SpeckleSpec(parameters.snr_db, parameters.seed))
        paths = [os.path.join(out, "noisy.pgm"), os.path.join(out, "noisy.csv")]
        write_pgm(paths[0], to_uint8(noisy))
        write_csv_matrix(paths[1], noisy)
        if np.any(noisy != img):
            print("realized SNR: {:.4f} dB".format(synth.snr_db(img, noisy - img)))
        return paths

    raise SignalError("unknown kind '{}'".format(kind))


def cmd_bench(scenarios, reps, nr=None, seed=0, dataset=None, out="."):
    """Times the scenarios and writes bench.json, bench.csv and bench_samples.jldump in [out].

    Returns
    -------
    The report (see BenchRunner.report())
    """
    report_controller = bc.ReportController(out, "bench", extra={"seed": seed})
    controllers = [bc.VerboseController(show_outliers=True), bc.DeterminismController(), report_controller]
    report = bench_suite(scenarios, reps, nr, seed, dataset, controllers)
    print("report written to {}".format(", ".join(report_controller.paths)))
    return report


def cmd_recognize(dataset, cfg, imf_range="2:7", sweep=False, k=1, folds=10, snr_db=-6., cache=None):
    """Face recognition on the summed IMFs of noisy faces.

    With [sweep], every IMF range is evaluated and heatmap.csv (rows: first IMF, columns: last
    IMF, NaN below the diagonal) is written; otherwise only [imf_range]. recognition.json
    holds the accuracies.

    Returns
    -------
    dict written to recognition.json
    """
    faces = load_orl(dataset or os.environ.get("SERIAL_EMD_DATASET"))
    faces.checkBalanced(folds)
    r = None if sweep else ImfRange.parse(imf_range)

    images = noisy_images(faces.images, snr_db, cfg.seed)
    spec = cfg.transitionSpec(faces.shape()[0])
    tensors = decompose_dataset(images, cfg.algorithm, cfg.sift_config, cfg.ensemble_config.replace(n_jobs=1),
                                spec, n_jobs=cfg.ensemble_config.n_jobs, cache=cache)
    os.makedirs(cfg.out, exist_ok=True)

    result = {"algorithm": cfg.algorithm, "D": spec.D, "k": k, "folds": folds, "snr_db": snr_db,
              "seed": cfg.seed, "images": len(faces)}
    if sweep:
        grid, stds = sweep_ranges(tensors, faces.labels, k, folds, cfg.seed)
        write_csv_matrix(os.path.join(cfg.out, "heatmap.csv"), grid,
                         ["lo{}".format(j + 1) for j in range(grid.shape[1])])
        best = best_range(grid)
        result.update({"best_range": "{}:{}".format(best.hi, best.lo),
                       "accuracy": grid[best.hi - 1, best.lo - 1], "std": stds[best.hi - 1, best.lo - 1]})
    else:
        mean, std = evaluate_range(tensors, faces.labels, r, k, folds, cfg.seed)
        result.update({"range": imf_range, "accuracy": mean, "std": std})

    _write_json(os.path.join(cfg.out, "recognition.json"), result)
    print("serial-{} accuracy={:.2f}% std={:.2f}".format(cfg.algorithm, 100 * result["accuracy"], 100 * result["std"]))
    return result


def cmd_denoise(input, cfg, drop=2):
    """ Removes the first [drop] IMFs of a PGM image, writing denoised.pgm and denoised.csv
    """
    img = read_pgm(input).astype(float)
    denoised = recognition_denoise(cfg.decompose(img), drop)
    os.makedirs(cfg.out, exist_ok=True)
    paths = [os.path.join(cfg.out, "denoised.pgm"), os.path.join(cfg.out, "denoised.csv")]
    write_pgm(paths[0], to_uint8(denoised))
    write_csv_matrix(paths[1], denoised)
    return paths


def main(argv=None):
    parameters = process_args(sys.argv[1:] if argv is None else argv, Defaults)
    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(parameters.verbose, 2)],
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        if parameters.command == "decompose":
            cmd_decompose(parameters.input, RunConfig.fromArgs(parameters))
        elif parameters.command == "synth":
            cmd_synth(parameters.kind, parameters)
        elif parameters.command == "bench":
            cmd_bench(parameters.scenarios or [Defaults.SCENARIO], parameters.reps, parameters.nr, parameters.seed,
                      parameters.dataset, parameters.out)
        elif parameters.command == "recognize":
            cmd_recognize(parameters.dataset, RunConfig.fromArgs(parameters), parameters.imf_range,
                          parameters.sweep, parameters.k, parameters.folds, parameters.snr_db, parameters.cache)
        elif parameters.command == "denoise":
            cmd_denoise(parameters.input, RunConfig.fromArgs(parameters), parameters.drop)
    except DatasetNotFoundError as e:
        print("error: {}".format(e.value), file=sys.stderr)
        return EXIT_DATASET_MISSING
    except (SignalError, SerializationError, FormatError, DatasetError, BenchError,
            InsufficientExtremaError, OSError) as e:
        print("error: {}".format(e), file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_OK

if __name__ == "__main__":
    sys.exit(main())

"""This module contains a function to help parse command-line arguments.

"""


import argparse

ALGO_CHOICES = ('emd', 'eemd', 'ceemdan', 'eemdan')


def _transition(value):
    if value == 'auto':
        return value
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or 'auto', got {!r}".format(value))


def _decomposition_parser(defaults):
    """ Options shared by the sub-commands running a decomposition
    """
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--algo', dest="algo", choices=ALGO_CHOICES,
                        default=defaults.ALGO,
                        help='One-dimensional algorithm run on the serialized signal (default: %(default)s)')
    parser.add_argument('--d', dest="D", type=_transition,
                        default=defaults.D,
                        help="Transition length, or 'auto' for 20%% of the channel length (default: %(default)s)")
    parser.add_argument('--nstd', dest="nstd", type=float,
                        default=defaults.NSTD,
                        help='Noise standard deviation of EEMD/CEEMDAN, relative to the signal (default: %(default)s)')
    parser.add_argument('--nr', dest="nr", type=int,
                        default=defaults.NR,
                        help='Number of noise realizations of EEMD/CEEMDAN (default: %(default)s)')
    parser.add_argument('--sd-threshold', dest="sd_threshold", type=float,
                        default=defaults.SD_THRESHOLD,
                        help='Sifting stops below this Cauchy-type criterion (default: %(default)s)')
    parser.add_argument('--max-sift-iters', dest="max_sift_iters", type=int,
                        default=defaults.MAX_SIFT_ITERS,
                        help='Maximum number of sifting iterations per IMF (default: %(default)s)')
    parser.add_argument('--max-imfs', dest="max_imfs", type=int,
                        default=defaults.MAX_IMFS,
                        help='Maximum number of IMFs (default: %(default)s)')
    parser.add_argument('--seed', dest="seed", type=int,
                        default=defaults.SEED,
                        help='Seed of every random draw (default: %(default)s)')
    parser.add_argument('--n-jobs', dest="n_jobs", type=int,
                        default=defaults.N_JOBS,
                        help='Number of joblib workers (default: %(default)s)')
    return parser


def process_args(args, defaults):
    """Handle the command line and return an object containing all the parameters.

    Arguments:
        args     - list of command line arguments (not including executable name)
        defaults - a name space with variables corresponding to each of the required default command line values.
    """

    parser = argparse.ArgumentParser(prog='serialemd',
                                     description='Serial empirical mode decomposition of multi-signals and images')
    parser.add_argument('-v', '--verbose', dest="verbose", action='count', default=0,
                        help='Log more (-v: info, -vv: debug)')
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    decomposition = _decomposition_parser(defaults)

    decompose = commands.add_parser('decompose', parents=[decomposition],
                                    help='Decompose a CSV multi-signal or a PGM image')
    decompose.add_argument('input', help='CSV file (header row, one column per channel) or binary PGM image')
    decompose.add_argument('--out', dest="out", default=defaults.OUT,
                           help='Output directory (default: %(default)s)')

    synth = commands.add_parser('synth', help='Generate synthetic data')
    synth.add_argument('kind', choices=('signals', 'ati', 'speckle'))
    synth.add_argument('--input', dest="input",
                       help='PGM image to corrupt (speckle only)')
    synth.add_argument('--snr-db', dest="snr_db", type=float, default=defaults.SNR_DB,
                       help='Target signal-to-noise ratio of the speckle noise (default: %(default)s)')
    synth.add_argument('--n-samples', dest="n_samples", type=int, default=defaults.N_SAMPLES,
                       help='Samples per variate (default: %(default)s)')
    synth.add_argument('--fs', dest="fs", type=float, default=defaults.FS,
                       help='Sampling frequency in Hz (default: %(default)s)')
    synth.add_argument('--seed', dest="seed", type=int, default=defaults.SEED,
                       help='Seed of the noise (default: %(default)s)')
    synth.add_argument('--out', dest="out", default=defaults.OUT,
                       help='Output directory (default: %(default)s)')

    bench = commands.add_parser('bench', help='Time the decompositions')
    bench.add_argument('--scenario', dest="scenarios", action='append',
                       help='multivariate-D-sweep (alias d-sweep), multivariate-algos, ati-algos or '
                       'face-per-image; may be repeated (default: {})'.format(defaults.SCENARIO))
    bench.add_argument('--reps', dest="reps", type=int, default=defaults.REPS,
                       help='Timed runs per case (default: %(default)s)')
    bench.add_argument('--nr', dest="nr", type=int, default=defaults.NR,
                       help='Number of noise realizations of EEMD/CEEMDAN (default: %(default)s)')
    bench.add_argument('--seed', dest="seed", type=int, default=defaults.SEED,
                       help='Seed of the ensembles (default: %(default)s)')
    bench.add_argument('--dataset', dest="dataset", default=None,
                       help='Face dataset directory (default: $SERIAL_EMD_DATASET)')
    bench.add_argument('--out', dest="out", default=defaults.OUT,
                       help='Output directory (default: %(default)s)')

    recognize = commands.add_parser('recognize', parents=[decomposition],
                                    help='Face recognition on summed IMFs of noisy faces')
    recognize.add_argument('--dataset', dest="dataset", default=None,
                           help='Face dataset directory, sN/M.pgm (default: $SERIAL_EMD_DATASET)')
    recognize.add_argument('--range', dest="imf_range", default=defaults.IMF_RANGE,
                           help='IMFs summed into the features, HI:LO (default: %(default)s)')
    recognize.add_argument('--sweep', dest="sweep", action='store_true',
                           help='Evaluate every IMF range and write the accuracy heat map')
    recognize.add_argument('--k', dest="k", type=int, default=defaults.K,
                           help='Number of neighbours of the classifier (default: %(default)s)')
    recognize.add_argument('--folds', dest="folds", type=int, default=defaults.FOLDS,
                           help='Number of cross-validation folds (default: %(default)s)')
    recognize.add_argument('--snr-db', dest="snr_db", type=float, default=defaults.SNR_DB,
                           help='Speckle noise added to the faces (default: %(default)s)')
    recognize.add_argument('--cache', dest="cache", default=None,
                           help='Directory caching the decompositions (default: no cache)')
    recognize.add_argument('--out', dest="out", default=defaults.OUT,
                           help='Output directory (default: %(default)s)')

    denoise = commands.add_parser('denoise', parents=[decomposition],
                                  help='Denoise a PGM image by dropping its first IMFs')
    denoise.add_argument('input', help='Binary PGM image')
    denoise.add_argument('--drop', dest="drop", type=int, default=defaults.DROP,
                         help='Number of leading IMFs removed (default: %(default)s)')
    denoise.add_argument('--out', dest="out", default=defaults.OUT,
                         help='Output directory (default: %(default)s)')

    parameters = parser.parse_args(args)

    return parameters

if __name__ == '__main__':
    pass

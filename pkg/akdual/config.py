import yaml

class ConfigError(ValueError):
    pass

CONVENTIONS = ["last-arg", "first-arg", "auto"]

def default_configuration():
    return {
        'convention': 'last-arg',
        'sweep_ceiling': 8,
        'num_processes': 1,
        'adjudicate_n_max': 5,
        'ext_extra_degrees': 2,
        'diagram_strand_pitch': 40,
        'diagram_point_pitch': 24,
        'diagram_hashsalt': 'akdual',
    }

def load_config_file(path):
    """Loads the config file.

    Args:
        path (str): config path.

    Returns:
        config (dict): defaults overlaid with the parameters specified in config.
    """
    config = default_configuration()
    with open(path) as config_file:
        overrides = yaml.safe_load(config_file) or {}

    if not isinstance(overrides, dict):
        raise ConfigError("config file %s must be a mapping" % path)
    unknown = sorted(set(overrides) - set(config))
    if unknown:
        raise ConfigError("unknown config keys: %s" % ", ".join(unknown))
    config.update(overrides)

    try:
        enforce_config_ok(config)
    except AssertionError as e:
        raise ConfigError("invalid config file %s: %s" % (path, e))

    return config

def _at_least(value, low, number=int):
    return isinstance(value, number) and not isinstance(value, bool) and value >= low

def enforce_config_ok(config):
    assert config['convention'] in CONVENTIONS, "convention must be one of %s" % CONVENTIONS
    assert _at_least(config['sweep_ceiling'], 0), "sweep_ceiling must be an integer >= 0"
    assert _at_least(config['num_processes'], 1), "num_processes must be an integer >= 1"
    assert _at_least(config['adjudicate_n_max'], 3), "adjudicate_n_max must be an integer >= 3"
    assert _at_least(config['ext_extra_degrees'], 1), "ext_extra_degrees must be an integer >= 1"
    for key in ('diagram_strand_pitch', 'diagram_point_pitch'):
        assert _at_least(config[key], 1e-9, (int, float)), "%s must be a positive number" % key

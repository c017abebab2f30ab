import os

import yaml

# top-level sections of config.yaml and the keys each one may carry
KNOWN_SECTIONS = {
    "field": {"prime"},
    "algebra": {"max_path_length"},
    "enumeration": {"node_budget", "workers"},
    "oracle": {"prime", "search_limit"},
    "decomposition": {"sweep_scalars", "exhaustive_budget"},
    "output": {"progress"},
    "logging": {"level", "file"},
}


def load_config(file_path):
    """
    Load the workbench YAML configuration.
    :param file_path: path of the configuration file.
    :return: a mapping of sections; an empty file gives an empty mapping.
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Config file not found: {file_path}")

    with open(file_path, 'r', encoding='utf-8') as file:
        config = yaml.safe_load(file)
    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ValueError(f"{file_path} must contain a mapping")
    check_sections(config, file_path)
    return config


def check_sections(config, file_path="config.yaml"):
    unknown = sorted(set(config) - set(KNOWN_SECTIONS))
    if unknown:
        raise ValueError(f"{file_path}: unknown sections {unknown}")
    for section, keys in KNOWN_SECTIONS.items():
        values = config.get(section) or {}
        if not isinstance(values, dict):
            raise ValueError(f"{file_path}: section {section!r} must be a mapping")
        extra = sorted(set(values) - keys)
        if extra:
            raise ValueError(f"{file_path}: unknown keys {extra} in section {section!r}")

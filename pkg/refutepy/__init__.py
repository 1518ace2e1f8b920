import warnings


def check_installed_packages(package_descriptions):
    installed_dict = {}
    for name, desc in package_descriptions.items():
        try:
            exec(f"import {name}")
            installed_dict[name] = True
        except ModuleNotFoundError:
            warnings.warn(f'Package "{name}" is not found. {desc}')
            installed_dict[name] = False
    return installed_dict


PACKAGE_DESCRIPTION = {
    'pandas': "The package is used to collect the results of `refute bench` into tables",
    'tqdm': "The package helps to track the progress of benchmark runs and estimate their time to complete",
    'joblib': "The package runs benchmark cells in parallel",
    'matplotlib': "The package is used to draw the found counter-examples",
    'networkx': "The package converts Graphs to networkx graphs to lay them out for drawing",
}
LIB_INSTALLED = check_installed_packages(PACKAGE_DESCRIPTION)


__version__ = '0.1.0'

#!/usr/bin/env python3
'''
The resource module for the project: packaged catalogs and settings

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'resource_folder',
    'catalog_folder',
    'settings_folder',
    'list_all_files',
    'get_path_to_catalog',
    'get_path_to_settings',
]

import os

# the resources directory
resource_folder = os.path.dirname(os.path.abspath(__file__))

# the resource sub-directories
catalog_folder = os.path.join(resource_folder, 'catalogs')
settings_folder = os.path.join(resource_folder, 'settings')


def list_all_files(folder: str, ext: 'str | list[str] | None' = None) -> 'dict[str, str]':
    '''
    list all the files in a resource directory

    parameters :
    * folder    :   the directory to walk
    * ext       :   (optional) the extension(s) to filter for

    returns :
    * files     :   a dictionary containing [file-name, path-to-file]
    '''
    files: 'dict[str, str]' = {}

    if isinstance(ext, str):
        ext = [ext]
    for dirpath, _, filenames in os.walk(folder):
        for file in sorted(filenames):
            if ext is None or any(file.lower().endswith('.' + e) for e in ext):
                files[file] = os.path.join(dirpath, file)

    return files


def _get_path_to_file(folder: str, file: str) -> str:
    try:
        return list_all_files(folder)[file]
    except KeyError:
        raise FileNotFoundError(
            f"could not find '{file}' in '{folder}'") from None


def get_path_to_catalog(file: str) -> str:
    '''get the path to a packaged catalog, e.g. `builtin.yaml`'''
    return _get_path_to_file(catalog_folder, file)


def get_path_to_settings(file: str) -> str:
    '''get the path to a packaged settings file, e.g. `default_settings.yaml`'''
    return _get_path_to_file(settings_folder, file)


if __name__ == '__main__':

    for folder in (catalog_folder, settings_folder):
        for file, path in list_all_files(folder, ['yaml', 'yml', 'json']).items():
            print(f"* {file} :\t{path}")

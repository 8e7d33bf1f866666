from .. import constants


class ModelFileBase:
    """
    An abstract base class for ModelFileWriter and ModelFileReader.
    """

    _current_version = constants.model_file_version

    _client_name = constants.app_name

    _client_version = constants.app_version

import logging

from cli.app import main
from config.settings import settings

logger = logging.getLogger(__name__)

if __name__ == "__main__":
    logger.debug(f"Starting {settings.APP_NAME} v{settings.APP_VERSION}")
    main()

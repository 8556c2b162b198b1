public class S050 extends State {
    public void open() {
        try {
            update();
        } catch (IllegalStateException e) {
            new S059();
        } catch (TimeoutException e) {
            send("msg7");
        } finally {
            send("msg1");
            try {
                if (counter > 0) {
                    send("msg0");
                    send("msg5");
                    send("msg5");
                }
                switch (event) {
                    case EV3:
                        update();
                        log("trace");
                        new S029();
                        break;
                }
                try {
                    new S050();
                    new S017();
                    log("trace");
                } finally {
                    log("trace");
                    log("trace");
                    send("msg5");
                }
            } catch (TimeoutException e) {
                new S048();
            } catch (IOException e) {
                new S029();
            }
            switch (event) {
                case EV3:
                    try {
                        new S039();
                        log("trace");
                    } catch (IOException e) {
                        send("msg4");
                        update();
                    } catch (IllegalStateException e) {
                        send("msg5");
                        new S094();
                        new S053();
                    }
                    send("msg3");
                    switch (event) {
                        case EV3:
                            new S082();
                            break;
                        case EV4:
                            new S010();
                            new S090();
                            send("msg6");
                            break;
                        case EV1:
                            new S092();
                            new S024();
                            update();
                            break;
                    }
                    break;
                case EV4:
                    send("msg4");
                    try {
                        new S085();
                        new S021();
                        send("msg4");
                    } finally {
                        send("msg1");
                        new S069();
                        new S048();
                    }
                    break;
            }
        }
        send("msg2");
        update();
    }

    public void close() {
        new S023();
    }

    public void start() {
        update();
        new S035();
    }

    public void stop() {
        new S041();
        switch (event) {
            case EV3:
                new S008();
                if (counter > 7) {
                    send("msg2");
                    try {
                        send("msg4");
                    } finally {
                        new S001();
                        send("msg4");
                        new S027();
                    }
                    new S012();
                }
                if (counter > 8) {
                    send("msg4");
                    update();
                    new S004();
                } else {
                    new S027();
                    log("trace");
                    send("msg5");
                }
                break;
            case EV2:
                update();
                break;
        }
    }

    public void tick() {
        new S087();
        send("msg7");
        try {
            try {
                switch (event) {
                    case EV5:
                        new Abstract14();
                        break;
                    case EV3:
                        send("msg0");
                        break;
                }
                if (counter > 8) {
                    new S091();
                    new S065();
                    send("msg6");
                }
                send("msg5");
            } finally {
                new S018();
                new S017();
                switch (event) {
                    case EV4:
                        update();
                        send("msg6");
                        break;
                    case EV3:
                        log("trace");
                        send("msg6");
                        break;
                    case EV0:
                        new S012();
                        send("msg5");
                        new Abstract7();
                        break;
                }
            }
            update();
            send("msg7");
        } catch (IllegalStateException e) {
            update();
            switch (event) {
                case EV0:
                    send("msg0");
                    switch (event) {
                        case EV4:
                            send("msg5");
                            send("msg4");
                            send("msg7");
                            break;
                        case EV5:
                            update();
                            send("msg2");
                            break;
                        case EV2:
                            log("trace");
                            break;
                        default:
                            new Abstract9();
                            break;
                    }
                    break;
                case EV5:
                    if (counter > 3) {
                        update();
                    }
                    break;
                case EV1:
                    send("msg6");
                    break;
            }
            switch (event) {
                case EV0:
                    switch (event) {
                        case EV5:
                            send("msg6");
                            break;
                        case EV2:
                            update();
                            log("trace");
                            break;
                        default:
                            new S079();
                            break;
                    }
                    send("msg4");
                    send("msg1");
                    break;
            }
        } catch (TimeoutException e) {
            new S090();
            if (counter > 7) {
                if (counter > 1) {
                    new S099();
                } else {
                    new S027();
                    log("trace");
                }
                new S071();
                switch (event) {
                    case EV1:
                        new S099();
                        new S085();
                        send("msg6");
                        break;
                    case EV2:
                        update();
                        send("msg0");
                        break;
                }
            } else {
                new S093();
                send("msg3");
            }
            send("msg6");
        }
    }

    public void reset() {
        new S020();
    }

    public void pause() {
        if (counter > 8) {
            switch (event) {
                case EV1:
                    send("msg6");
                    break;
                case EV5:
                    try {
                        send("msg5");
                        new S069();
                        send("msg6");
                    } catch (IOException e) {
                        new S045();
                    } catch (IllegalStateException e) {
                        send("msg6");
                    } finally {
                        new S024();
                        send("msg4");
                        send("msg7");
                    }
                    log("trace");
                    break;
            }
            if (counter > 5) {
                send("msg5");
                switch (event) {
                    case EV5:
                        new S079();
                        break;
                }
                send("msg0");
            }
            if (counter > 1) {
                update();
                log("trace");
                send("msg5");
            }
        } else {
            new S006();
        }
        send("msg1");
    }

    public void resume() {
        if (counter > 2) {
            send("msg7");
            log("trace");
            if (counter > 2) {
                new S050();
                send("msg1");
            } else {
                send("msg4");
            }
        } else {
            new S039();
            send("msg7");
        }
        switch (event) {
            case EV0:
                send("msg2");
                send("msg2");
                break;
            case EV3:
                try {
                    send("msg6");
                } catch (IllegalStateException e) {
                    new S030();
                    send("msg7");
                } finally {
                    if (counter > 9) {
                        send("msg3");
                    }
                }
                switch (event) {
                    case EV3:
                        switch (event) {
                            case EV3:
                                send("msg4");
                                break;
                        }
                        new S036();
                        break;
                    case EV0:
                        switch (event) {
                            case EV5:
                                new S074();
                                send("msg4");
                                log("trace");
                                break;
                            case EV0:
                                update();
                                break;
                        }
                        new S023();
                        send("msg4");
                        break;
                    case EV1:
                        send("msg0");
                        break;
                }
                update();
                break;
            case EV4:
                if (counter > 9) {
                    try {
                        new S083();
                        send("msg1");
                        new S042();
                    } catch (TimeoutException e) {
                        send("msg2");
                    }
                    send("msg1");
                }
                break;
        }
    }

    public void load() {
        new S050();
        if (counter > 0) {
            send("msg1");
        } else {
            update();
            try {
                new S049();
                update();
            } finally {
                if (counter > 6) {
                    send("msg7");
                } else {
                    update();
                    send("msg6");
                    log("trace");
                }
            }
        }
    }

    public void save() {
        update();
        log("trace");
        try {
            new S052();
            switch (event) {
                case EV2:
                    if (counter > 7) {
                        new S034();
                    }
                    break;
                case EV4:
                    send("msg2");
                    new Abstract21();
                    send("msg2");
                    break;
                case EV1:
                    if (counter > 2) {
                        new S013();
                    } else {
                        send("msg5");
                    }
                    break;
            }
        } catch (IOException e) {
            send("msg7");
            new S083();
        } catch (TimeoutException e) {
            send("msg4");
            send("msg7");
            send("msg6");
        }
    }
}

public class S065 extends State {
    public void open() {
        send("msg3");
        log("trace");
    }

    public void close() {
        new S006();
        send("msg3");
    }

    public void start() {
        try {
            send("msg3");
            try {
                new S048();
                update();
                log("trace");
            } catch (TimeoutException e) {
                new S041();
            } catch (IOException e) {
                new S007();
                switch (event) {
                    case EV4:
                        new S045();
                        break;
                    case EV5:
                        send("msg3");
                        break;
                    case EV3:
                        send("msg3");
                        break;
                }
            }
            update();
        } finally {
            send("msg1");
            try {
                new S002();
                send("msg0");
            } catch (IOException e) {
                new S047();
                send("msg4");
            } catch (IllegalStateException e) {
                try {
                    update();
                    send("msg6");
                } catch (IllegalStateException e) {
                    send("msg1");
                    send("msg0");
                } catch (IOException e) {
                    send("msg5");
                    send("msg1");
                    new S055();
                } finally {
                    send("msg5");
                    new S016();
                    log("trace");
                }
                try {
                    send("msg2");
                } catch (IllegalStateException e) {
                    update();
                    new S051();
                    new S073();
                }
            }
        }
        send("msg4");
    }

    public void stop() {
        new S010();
        send("msg5");
    }

    public void tick() {
        try {
            send("msg5");
        } catch (IllegalStateException e) {
            send("msg3");
            if (counter > 7) {
                send("msg1");
                send("msg7");
                new S090();
            } else {
                switch (event) {
                    case EV2:
                        send("msg5");
                        break;
                    case EV4:
                        send("msg7");
                        new Abstract15();
                        log("trace");
                        break;
                    case EV5:
                        update();
                        send("msg2");
                        break;
                }
                switch (event) {
                    case EV0:
                        new S026();
                        break;
                    case EV1:
                        log("trace");
                        send("msg7");
                        send("msg0");
                        break;
                    case EV4:
                        send("msg0");
                        new S028();
                        new S062();
                        break;
                }
                switch (event) {
                    case EV1:
                        send("msg6");
                        send("msg7");
                        send("msg4");
                        break;
                    case EV4:
                        update();
                        new S021();
                        break;
                }
            }
        } finally {
            send("msg4");
        }
        switch (event) {
            case EV1:
                log("trace");
                break;
            case EV5:
                switch (event) {
                    case EV4:
                        if (counter > 6) {
                            new S015();
                            update();
                            new S069();
                        }
                        switch (event) {
                            case EV5:
                                send("msg7");
                                send("msg5");
                                send("msg2");
                                break;
                        }
                        break;
                    case EV0:
                        new S027();
                        switch (event) {
                            case EV0:
                                send("msg0");
                                send("msg2");
                                break;
                        }
                        log("trace");
                        break;
                    case EV2:
                        new Abstract20();
                        new S078();
                        if (counter > 9) {
                            new S034();
                        }
                        break;
                }
                try {
                    send("msg3");
                    try {
                        new S013();
                    } catch (TimeoutException e) {
                        send("msg4");
                        new S003();
                    }
                } catch (IOException e) {
                    new S053();
                } finally {
                    send("msg6");
                    send("msg5");
                }
                try {
                    send("msg4");
                    send("msg5");
                } catch (IOException e) {
                    send("msg7");
                    update();
                }
                break;
        }
        send("msg6");
    }

    public void reset() {
        new S079();
        try {
            send("msg4");
            new S085();
            new S042();
        } catch (IllegalStateException e) {
            new S036();
        } catch (IOException e) {
            try {
                update();
                new S082();
                switch (event) {
                    case EV1:
                        send("msg0");
                        send("msg4");
                        break;
                    case EV0:
                        send("msg1");
                        send("msg5");
                        send("msg1");
                        break;
                    case EV5:
                        new S002();
                        send("msg4");
                        break;
                }
            } catch (TimeoutException e) {
                new S052();
                if (counter > 1) {
                    log("trace");
                    new S061();
                    send("msg2");
                } else {
                    log("trace");
                    new S084();
                    send("msg7");
                }
            } catch (IllegalStateException e) {
                new S040();
                try {
                    send("msg6");
                    new S081();
                } catch (TimeoutException e) {
                    send("msg0");
                } finally {
                    new Helper();
                    send("msg4");
                    send("msg0");
                }
                send("msg1");
            }
        }
    }

    public void pause() {
        new S048();
    }

    public void resume() {
        if (counter > 6) {
            switch (event) {
                case EV5:
                    try {
                        send("msg4");
                        send("msg7");
                    } catch (IOException e) {
                        update();
                    } finally {
                        new S010();
                        send("msg3");
                        send("msg7");
                    }
                    new S004();
                    try {
                        send("msg2");
                        new S021();
                    } catch (IOException e) {
                        send("msg0");
                        new S036();
                    } catch (TimeoutException e) {
                        update();
                        send("msg5");
                    } finally {
                        send("msg1");
                        new S056();
                        log("trace");
                    }
                    break;
                case EV2:
                    send("msg4");
                    new S019();
                    break;
                case EV3:
                    new S048();
                    send("msg0");
                    break;
                default:
                    update();
                    send("msg1");
                    break;
            }
        } else {
            new S030();
            switch (event) {
                case EV3:
                    send("msg4");
                    log("trace");
                    break;
                case EV5:
                    switch (event) {
                        case EV3:
                            log("trace");
                            log("trace");
                            break;
                        case EV4:
                            send("msg3");
                            break;
                    }
                    send("msg5");
                    log("trace");
                    break;
                case EV1:
                    send("msg7");
                    break;
            }
        }
        send("msg6");
    }

    public void load() {
        try {
            send("msg0");
        } finally {
            try {
                if (counter > 9) {
                    send("msg6");
                    log("trace");
                    send("msg6");
                } else {
                    new S028();
                }
                switch (event) {
                    case EV2:
                        new S054();
                        break;
                }
            } catch (TimeoutException e) {
                switch (event) {
                    case EV3:
                        log("trace");
                        send("msg2");
                        new S071();
                        break;
                    case EV1:
                        new S052();
                        send("msg4");
                        send("msg7");
                        break;
                    default:
                        new S077();
                        new S085();
                        break;
                }
            } finally {
                new S012();
                new S046();
                send("msg3");
            }
            if (counter > 0) {
                new S078();
                send("msg4");
            } else {
                new Abstract24();
            }
            switch (event) {
                case EV1:
                    new S087();
                    send("msg7");
                    new S082();
                    break;
                case EV2:
                    update();
                    break;
                case EV0:
                    send("msg6");
                    if (counter > 5) {
                        new S070();
                        send("msg5");
                        send("msg0");
                    }
                    send("msg6");
                    break;
            }
        }
        switch (event) {
            case EV3:
                send("msg0");
                send("msg2");
                send("msg0");
                break;
            case EV4:
                switch (event) {
                    case EV2:
                        send("msg4");
                        send("msg6");
                        send("msg4");
                        break;
                }
                break;
        }
        update();
    }

    public void save() {
        update();
        try {
            send("msg6");
        } catch (TimeoutException e) {
            if (counter > 9) {
                log("trace");
            } else {
                new S065();
                switch (event) {
                    case EV4:
                        send("msg2");
                        send("msg6");
                        break;
                    case EV5:
                        new S096();
                        new S092();
                        break;
                }
                send("msg1");
            }
            send("msg2");
        } finally {
            switch (event) {
                case EV5:
                    new S070();
                    try {
                        log("trace");
                    } catch (IllegalStateException e) {
                        new S069();
                    } catch (IOException e) {
                        send("msg0");
                        send("msg5");
                        new S025();
                    } finally {
                        new S047();
                    }
                    break;
                case EV0:
                    new S028();
                    try {
                        send("msg4");
                    } catch (IOException e) {
                        new S081();
                        send("msg0");
                        new S066();
                    }
                    break;
            }
        }
        new S068();
    }
}

public class S036 extends Abstract2 {
    public void open() {
        new S091();
        send("msg7");
        if (counter > 7) {
            update();
        }
    }

    public void close() {
        send("msg1");
        send("msg3");
        switch (event) {
            case EV1:
                new S026();
                new S056();
                break;
            case EV5:
                switch (event) {
                    case EV5:
                        new S096();
                        send("msg1");
                        break;
                    default:
                        send("msg2");
                        new S041();
                        break;
                }
                switch (event) {
                    case EV4:
                        try {
                            send("msg0");
                        } catch (IllegalStateException e) {
                            new S036();
                            log("trace");
                        } catch (TimeoutException e) {
                            log("trace");
                            update();
                            send("msg7");
                        }
                        send("msg2");
                        log("trace");
                        break;
                    case EV1:
                        send("msg2");
                        update();
                        new S028();
                        break;
                    case EV2:
                        send("msg1");
                        update();
                        new S069();
                        break;
                    default:
                        new S014();
                        break;
                }
                break;
            case EV3:
                send("msg2");
                break;
            default:
                update();
                new S004();
                new S072();
                break;
        }
    }

    public void start() {
        new S070();
    }

    public void stop() {
        try {
            new S047();
            log("trace");
            new S083();
        } catch (IllegalStateException e) {
            log("trace");
            try {
                send("msg1");
                send("msg3");
            } catch (IOException e) {
                if (counter > 0) {
                    new Abstract17();
                }
                send("msg5");
                new S016();
            } catch (TimeoutException e) {
                send("msg1");
                new S040();
                try {
                    update();
                } finally {
                    new S036();
                    new S091();
                    new S029();
                }
            } finally {
                send("msg3");
                new S000();
                new S018();
            }
            switch (event) {
                case EV1:
                    try {
                        send("msg6");
                    } catch (IOException e) {
                        new S030();
                        send("msg6");
                        new S085();
                    } finally {
                        new S009();
                        send("msg2");
                    }
                    break;
            }
        } catch (IOException e) {
            if (counter > 3) {
                send("msg2");
                send("msg1");
                try {
                    update();
                } catch (IllegalStateException e) {
                    new S085();
                } catch (IOException e) {
                    log("trace");
                    send("msg2");
                } finally {
                    send("msg5");
                    log("trace");
                }
            } else {
                try {
                    send("msg3");
                    send("msg4");
                } catch (IOException e) {
                    send("msg2");
                } catch (IllegalStateException e) {
                    send("msg2");
                }
                switch (event) {
                    case EV5:
                        send("msg4");
                        new S038();
                        break;
                    case EV2:
                        log("trace");
                        update();
                        break;
                    case EV3:
                        send("msg5");
                        new S024();
                        send("msg5");
                        break;
                }
            }
            send("msg6");
            new S065();
        }
        send("msg4");
    }

    public void tick() {
        try {
            new S062();
        } catch (IOException e) {
            if (counter > 7) {
                update();
                try {
                    new S049();
                } catch (TimeoutException e) {
                    new S079();
                    update();
                    update();
                } catch (IllegalStateException e) {
                    log("trace");
                    new S085();
                    send("msg3");
                }
                if (counter > 5) {
                    send("msg0");
                    new S008();
                } else {
                    new S038();
                    new S088();
                    new S007();
                }
            } else {
                new S041();
                send("msg0");
                if (counter > 5) {
                    send("msg6");
                }
            }
            switch (event) {
                case EV4:
                    new S005();
                    update();
                    send("msg6");
                    break;
            }
            new S025();
        } catch (IllegalStateException e) {
            send("msg4");
            new S056();
            send("msg6");
        }
        new Abstract13();
    }

    public void reset() {
        try {
            send("msg7");
            switch (event) {
                case EV3:
                    send("msg6");
                    switch (event) {
                        case EV2:
                            new S082();
                            new S029();
                            new S004();
                            break;
                        case EV3:
                            new S007();
                            send("msg4");
                            break;
                    }
                    log("trace");
                    break;
                case EV2:
                    log("trace");
                    break;
                case EV5:
                    send("msg6");
                    send("msg3");
                    send("msg1");
                    break;
            }
        } finally {
            switch (event) {
                case EV0:
                    send("msg1");
                    break;
                case EV2:
                    if (counter > 0) {
                        send("msg5");
                        new S029();
                    } else {
                        send("msg4");
                        update();
                    }
                    send("msg5");
                    new S055();
                    break;
                case EV5:
                    try {
                        log("trace");
                        send("msg3");
                        send("msg6");
                    } finally {
                        send("msg4");
                        update();
                        update();
                    }
                    if (counter > 3) {
                        send("msg5");
                        new S010();
                    } else {
                        send("msg0");
                        send("msg3");
                    }
                    break;
            }
            new S007();
            if (counter > 5) {
                try {
                    send("msg2");
                    send("msg3");
                } catch (IllegalStateException e) {
                    log("trace");
                    send("msg5");
                    send("msg0");
                } catch (IOException e) {
                    new S000();
                }
            } else {
                new S069();
            }
        }
        new S078();
    }

    public void pause() {
        switch (event) {
            case EV1:
                log("trace");
                if (counter > 5) {
                    try {
                        new S037();
                        send("msg0");
                    } catch (IOException e) {
                        new S077();
                    } catch (IllegalStateException e) {
                        send("msg6");
                        send("msg4");
                    }
                }
                break;
            case EV5:
                if (counter > 3) {
                    send("msg3");
                    try {
                        new S011();
                        send("msg5");
                        send("msg6");
                    } catch (IllegalStateException e) {
                        new S084();
                        new S058();
                    }
                } else {
                    send("msg5");
                }
                try {
                    log("trace");
                    send("msg7");
                    if (counter > 7) {
                        send("msg5");
                    }
                } catch (IOException e) {
                    log("trace");
                }
                break;
            case EV3:
                new S050();
                new S058();
                break;
        }
    }

    public void resume() {
        if (counter > 1) {
            new S057();
            send("msg7");
        } else {
            if (counter > 2) {
                new S013();
                update();
                switch (event) {
                    case EV0:
                        send("msg4");
                        break;
                    case EV5:
                        new S037();
                        update();
                        break;
                    case EV3:
                        send("msg7");
                        send("msg3");
                        new S070();
                        break;
                }
            }
            if (counter > 5) {
                switch (event) {
                    case EV4:
                        new Abstract17();
                        update();
                        break;
                    case EV3:
                        update();
                        new S054();
                        break;
                }
            } else {
                try {
                    send("msg2");
                    log("trace");
                    update();
                } catch (IOException e) {
                    log("trace");
                    new S033();
                } catch (IllegalStateException e) {
                    log("trace");
                    send("msg2");
                } finally {
                    new S028();
                    new S071();
                }
            }
        }
        try {
            if (counter > 0) {
                if (counter > 4) {
                    new S028();
                    send("msg6");
                }
            } else {
                update();
                new S025();
            }
            update();
            log("trace");
        } catch (TimeoutException e) {
            new S075();
        } finally {
            log("trace");
            send("msg6");
            new S078();
        }
    }

    public void load() {
        if (counter > 7) {
            log("trace");
        }
    }

    public void save() {
        send("msg2");
        new S054();
        switch (event) {
            case EV3:
                new S075();
                if (counter > 0) {
                    switch (event) {
                        case EV2:
                            send("msg2");
                            send("msg7");
                            break;
                        case EV5:
                            new S087();
                            new S048();
                            log("trace");
                            break;
                    }
                } else {
                    send("msg4");
                    log("trace");
                    new S095();
                }
                send("msg3");
                break;
            case EV2:
                try {
                    send("msg7");
                    switch (event) {
                        case EV2:
                            new S028();
                            new S004();
                            send("msg2");
                            break;
                        case EV3:
                            log("trace");
                            break;
                    }
                } catch (IOException e) {
                    new Abstract21();
                }
                break;
            case EV1:
                switch (event) {
                    case EV1:
                        new S085();
                        switch (event) {
                            case EV0:
                                send("msg5");
                                new S089();
                                new S066();
                                break;
                        }
                        break;
                    case EV2:
                        switch (event) {
                            case EV1:
                                log("trace");
                                send("msg0");
                                break;
                            case EV0:
                                update();
                                break;
                        }
                        send("msg3");
                        break;
                    case EV5:
                        send("msg1");
                        if (counter > 8) {
                            send("msg5");
                            send("msg3");
                        } else {
                            new S058();
                        }
                        new S086();
                        break;
                    default:
                        new S021();
                        break;
                }
                break;
        }
    }
}
